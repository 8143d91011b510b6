#pragma once

#include <memory>
#include <vector>

#include "taulat/grassmann.hpp"
#include "taulat/times.hpp"

namespace taulat {

// Jacobi-Trudi determinant det( h_{lambda_i - i + j} ) with h from
// homogeneous_from_times; needs lambda_1 + l(lambda) - 1 <= T.
Rational schur_at(const Partition& lambda, const TimeVector& t);

// Evaluates tau_w = sum over lambda in the k x (n-k) rectangle of
// pi_lambda(w) s_lambda(t).  Minors and Jacobi-Trudi index patterns are
// prepared once per element so repeated evaluations at shifted times only
// pay for the h-series and the small determinants.
class TauEvaluator {
public:
    explicit TauEvaluator(GrassmannianElement w);

    const GrassmannianElement& element() const { return w_; }
    int min_truncation() const { return w_.n() - 1; }

    Rational operator()(const TimeVector& t) const;

private:
    struct Term {
        Rational coefficient;          // pi_lambda
        std::vector<int> jt_degrees;   // row-major l x l grid of h-indices
        int size;                      // l = l(lambda)
    };
    GrassmannianElement w_;
    std::vector<Term> terms_;
    int max_h_degree_ = 0;
};

Rational tau_eval(const GrassmannianElement& w, const TimeVector& t);

// zeta_m(t; x_1..x_m) = prod_{i<j}(x_i - x_j) * tau(t + sum [x_i]); the
// parameters must be pairwise distinct.
Rational zeta(const TauEvaluator& tau, const TimeVector& t, const std::vector<Rational>& xs);

// sum_{j=1..k+1} (-1)^j zeta_k(t; xs, y_j) zeta_k(t; ys \ y_j) over k-1
// parameters xs and k+1 parameters ys, all 2k pairwise distinct; exactly
// zero for every element.
Rational addition_formula_residual(const TauEvaluator& tau, const TimeVector& t,
                                   const std::vector<Rational>& xs,
                                   const std::vector<Rational>& ys);

// tau(t) - tau(t~) for the embedded element of a symmetric affine matrix;
// exactly zero.
Rational ckp_symmetry_residual(const LagrangianElement& w0, const TimeVector& t);

} // namespace taulat
