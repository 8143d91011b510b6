#pragma once

#include <functional>
#include <map>

#include "taulat/lattice.hpp"
#include "taulat/matrix.hpp"
#include "taulat/partition.hpp"

namespace taulat {

// Element of Gr(k, n) given by its n x k homogeneous coordinate matrix W of
// full column rank.  Rows are addressed by the indices -k, ..., n-k-1, top to
// bottom, so a MultiIndex entry L_j names row L_j + k (0-based) directly.
class GrassmannianElement {
public:
    GrassmannianElement(int k, int n, Matrix W);

    int k() const { return k_; }
    int n() const { return n_; }
    const Matrix& coordinates() const { return W_; }

    // det of the k x k submatrix whose j-th row is row L_j of W; skew in L,
    // zero on repeated entries.
    Rational plucker(const MultiIndex& L) const;
    // Same minor addressed by the partition label of the sorted multi-index.
    Rational plucker(const Partition& lambda) const;

private:
    int k_, n_;
    Matrix W_;
};

// Element of the Lagrangian big cell of Gr(k, 2k): a symmetric k x k affine
// coordinate matrix.
class LagrangianElement {
public:
    LagrangianElement(int k, Matrix M);

    int k() const { return k_; }
    const Matrix& affine_matrix() const { return M_; }

    // det( M[min(a_i,b_j), max(a_i,b_j)] ) over the Frobenius indices of
    // lambda, in 1-based matrix indexing (so the hook (i-1|j-1) gives M_ij).
    Rational plucker(const Partition& lambda) const;

private:
    int k_;
    Matrix M_;
};

// Big-cell embedding: the 2k x k matrix with identity top block whose lower
// block carries M with the alternating row sign of the dual-basis pairing.
// For symmetric M the image is isotropic; arbitrary M is accepted so that
// negative controls can plant asymmetric data.
GrassmannianElement big_cell_embedding(const Matrix& M);
GrassmannianElement lagrangian_to_grassmannian(const LagrangianElement& w0);

// Anything that can stand in for skew coordinates pi~_L: the Grassmannian
// minors, a partition-keyed value map, or lattice evaluations.
using CoordinateFn = std::function<Rational(const MultiIndex&)>;

CoordinateFn coordinates_of(const GrassmannianElement& w);
// sgn(L) times the value stored for the partition of sorted L; zero on
// repeats.  Missing partitions throw.
CoordinateFn coordinates_of(const std::map<Partition, Rational>& values, int k, int n);

// p_{I,J} = sum_j (-1)^j pi~_{I,J_j} pi~_{J \ J_j} for a (k-1)-tuple I and a
// (k+1)-tuple J; exactly zero when the coordinates come from an element.
Rational plucker_relation_residual(const CoordinateFn& coords, const MultiIndex& I,
                                   const MultiIndex& J);
Rational plucker_relation_residual(const GrassmannianElement& w, const MultiIndex& I,
                                   const MultiIndex& J);

// pi_empty * det( hook(a_i|b_j) / pi_empty ) over the Frobenius indices of
// lambda; reproduces the direct minor on the big cell.  hooks is keyed by
// hook partitions; throws if pi_empty == 0 or a needed hook is absent.
Rational giambelli_xi(const std::map<Partition, Rational>& hooks, const Rational& pi_empty,
                      const Partition& lambda);

} // namespace taulat
