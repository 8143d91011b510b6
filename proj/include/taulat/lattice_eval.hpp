#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "taulat/tau.hpp"

namespace taulat {

// Spacing parameters x_i, i in Z, for the KP lattice.  Values used together
// must be pairwise distinct (the x_i - x_j prefactors are inverted).
class XParameters {
public:
    XParameters() = default;
    explicit XParameters(std::map<int, Rational> values);

    const Rational& at(int i) const;
    bool has(int i) const { return values_.count(i) != 0; }
    const std::map<int, Rational>& values() const { return values_; }

private:
    std::map<int, Rational> values_;
};

// Parameters y_i, i >= 1, for the odd-flow sublattice: pairwise distinct and
// strictly positive, so y_i - y_j, y_i + y_j and 2 y_i are all invertible.
class YParameters {
public:
    YParameters() = default;
    explicit YParameters(std::map<int, Rational> values);

    const Rational& at(int i) const;
    const std::map<int, Rational>& values() const { return values_; }

    // The substitution x_i -> y_{i+1} (i >= 0), x_i -> -y_{-i} (i < 0)
    // realized as an x-assignment on [-range, range-1].
    XParameters specialize_x(int range) const;

private:
    std::map<int, Rational> values_;
};

// Normalized evaluations of tau on the lattice A:
//   H^n(t) = prod_{i<j} (x_i - x_j)^(n_i n_j) * tau(t + sum_i n_i [x_i])
// with the product over ordered index pairs in the support.  Values are
// cached per lattice point; the cache is write-once and transparent.
class HLattice {
public:
    HLattice(std::shared_ptr<const TauEvaluator> tau, XParameters params, TimeVector base);
    HLattice(const GrassmannianElement& w, XParameters params, TimeVector base);

    const TauEvaluator& tau() const { return *tau_; }
    const XParameters& params() const { return params_; }
    const TimeVector& base_time() const { return base_; }

    Rational at(const LatticePoint& n) const;
    // H^{n,lambda}: H at the Frobenius-offset point.
    Rational at(const LatticePoint& n, const Partition& lambda) const;
    // H^n evaluated with the base time translated by [x_i]*m (used by the
    // shift identities; bypasses the cache).
    Rational at_shifted(const LatticePoint& n, const Rational& x, long m) const;

    // Work counter: number of tau evaluations actually performed.
    long evaluations() const { return evals_; }

private:
    Rational evaluate(const LatticePoint& n, const TimeVector& t) const;

    std::shared_ptr<const TauEvaluator> tau_;
    XParameters params_;
    TimeVector base_;
    mutable std::map<LatticePoint, Rational> cache_;
    mutable std::mutex mutex_;
    mutable long evals_ = 0;
};

// H^{n+alpha_i}(t) - (-1)^(sum_{j<i} n_j) prod_{j != i} (x_i - x_j)^(n_j)
// * H^n(t + [x_i]); exactly zero.
Rational shift_lemma_residual(const HLattice& H, const LatticePoint& n, int i);

enum class CheckerKind { plain, x, y, z };

// Lagrangian evaluations on the sublattice B (and general offset points
// in A under the y-specialization):
//   h^n = prod_{1<=i<j} (y_i - y_j)^(n_{i-1} n_{j-1} + n_{-i} n_{-j})
//       * prod_{i,j>=1} (-1)^(n_{-i} n_{j-1}) (y_i + y_j)^(n_{-i} n_{j-1})
//       * tau(t' + sum_{i>=1} (n_{i-1} [y_i] + n_{-i} [-y_i])).
class LagrangianLattice {
public:
    LagrangianLattice(const LagrangianElement& w0, YParameters params, CkpTimeVector base);

    const TauEvaluator& tau() const { return *tau_; }
    const YParameters& params() const { return params_; }

    // h^n for any point of A (the B membership is not required here; offset
    // points of non-symmetric partitions leave B).
    Rational at(const LatticePoint& n) const;
    // h^{n,lambda}: h at the Frobenius-offset point.
    Rational at(const LatticePoint& n, const Partition& lambda) const;

    // Checkerboard-signed families on B3, addressed by coordinates along
    // (beta_1, beta_2, beta_3):
    //   plain: (-1)^(n1+n2+n3+n1n2+n1n3+n2n3) h^{n,()}
    //   x:     (-1)^(n1^2+n2n3+n3^2)          h^{n,(1|2)}
    //   y:     (-1)^(n1n3+n3^2)               h^{n,(0|2)}
    //   z:     (-1)^(n1n2+n2^2+n3^2)          h^{n,(0|1)}
    Rational checkerboard(const LatticePoint& nprime, CheckerKind kind) const;

    long evaluations() const { return evals_; }

private:
    std::shared_ptr<const TauEvaluator> tau_;
    YParameters params_;
    TimeVector base_;
    mutable std::map<LatticePoint, Rational> cache_;
    mutable std::mutex mutex_;
    mutable long evals_ = 0;
};

} // namespace taulat
