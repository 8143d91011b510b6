#pragma once

#include <array>
#include <functional>
#include <map>

#include "taulat/lattice_eval.hpp"

namespace taulat {

// Coordinate provider keyed by partition labels (minors, H- or h-values).
using PartitionFn = std::function<Rational(const Partition&)>;

PartitionFn partition_fn(const std::map<Partition, Rational>& values);
PartitionFn partition_fn(const GrassmannianElement& w);
PartitionFn partition_fn(const LagrangianElement& w0);
// lambda -> H^{n,lambda} at a fixed base point.
PartitionFn partition_fn(const HLattice& H, const LatticePoint& n);
// lambda -> h^{n',lambda}.
PartitionFn partition_fn(const LagrangianLattice& h, const LatticePoint& nprime);

// The short three-term relation in the 2 x 2 window:
// v() v(2,2) - v(1) v(2,1) + v(2) v(1,1); exactly zero on coordinate or
// lattice data.
Rational octahedron_residual_H(const PartitionFn& v);

// Integer grid carrying tau values tau_{l,m,n} = tau(t0 + l[a] + m[b] + n[c]).
// The grid relation, rederived from the short relation above through the
// parameter dictionary x_{-2} = 0, x_{-1} = a, x_0 = b, x_1 = c and lattice
// components (1, l+1, m, n), reads
//
//   a(b-c) tau_{l+1,m,n} tau_{l,m+1,n+1} + b(c-a) tau_{l,m+1,n} tau_{l+1,m,n+1}
//     + c(a-b) tau_{l,m,n+1} tau_{l+1,m+1,n} = 0.
//
// Propagation solves for the target in the tau_{l,m+1,n+1} slot, which is the
// unique vertex of maximal level u = m + n - l; its five companions sit on
// levels u-1, u-2, u-3.
class OctahedronGrid {
public:
    using Site = std::array<int, 3>; // (l, m, n)

    OctahedronGrid(Rational a, Rational b, Rational c);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }

    bool has(const Site& s) const { return values_.count(s) != 0; }
    const Rational& at(const Site& s) const;
    void set(const Site& s, Rational value);
    const std::map<Site, Rational>& values() const { return values_; }

    // Relation residual for the octahedron whose lowest corner is (l, m, n).
    Rational residual(const Site& base) const;

    // Solves the relation for the value at target, writes and returns it.
    // Throws MissingValue if a companion is absent, DegenerateEvaluation if
    // the divisor tau value is zero.
    Rational propagate(const Site& target);

    static int level(const Site& s) { return s[1] + s[2] - s[0]; }

private:
    Rational a_, b_, c_;
    std::map<Site, Rational> values_;
};

// Seven cubic/quartic combinations of Frobenius-labelled coordinates, each
// exactly zero on Plucker coordinates of any element and on lattice H-data.
// Order: k1, k2, k3, k1T, k2T, k3T, k0, for hook indices i < j < k.
std::array<Rational, 7> kappa_residuals(const PartitionFn& coords, int i, int j, int k);

// Four value maps on B3 (coordinates along beta_1, beta_2, beta_3) for the
// checkerboard-signed families.
struct HexahedronState {
    using Site = std::array<int, 3>;
    std::map<Site, Rational> h, hx, hy, hz;

    const Rational& get(const std::map<Site, Rational>& m, const Site& s) const;
};

// Left-minus-right values of the four-equation system
//   h hx hx_{+1}  = h h_1 h_23 + h_1 h_2 h_3 + hx hy hz            (sides,
//   h hy hy_{+2}  = h h_2 h_13 + h_1 h_2 h_3 + hx hy hz             cyclic)
//   h hz hz_{+3}  = h h_3 h_12 + h_1 h_2 h_3 + hx hy hz
//   h^2 hx hy hz h_123 = (hx hy hz)^2
//       + (hx hy hz) (2 h_1 h_2 h_3 + h (h_1 h_23 + h_2 h_13 + h_3 h_12))
//       + (h_1 h_2 + h h_12)(h_1 h_3 + h h_13)(h_2 h_3 + h h_23)    (top)
// at the given base site; exactly zero on checkerboard data.
std::array<Rational, 4> hexahedron_residuals(const HexahedronState& state,
                                             const HexahedronState::Site& base);

// Solves the three side equations and then the top one by exact division,
// writing hx at base+e1, hy at base+e2, hz at base+e3 and h at base+(1,1,1).
std::array<Rational, 4> hexahedron_propagate(HexahedronState& state,
                                             const HexahedronState::Site& base);

// The 2x2x2 hyperdeterminant quartic on the cube of values
// (h, h_i, h_j, h_k, h_ij, h_ik, h_jk, h_ijk); zero on lattice h-data and on
// principal minors of symmetric matrices.
Rational kashaev_residual(const Rational& h, const Rational& hi, const Rational& hj,
                          const Rational& hk, const Rational& hij, const Rational& hik,
                          const Rational& hjk, const Rational& hijk);

struct KashaevRoots {
    bool rational = false;  // false: the roots are irrational
    Rational first, second; // valid when rational
    Rational discriminant;
};

// The quartic is quadratic in the top value; returns both roots when the
// discriminant is a perfect square in Q, otherwise reports the discriminant.
// Root selection is left to the caller (the hexahedron system decides).
KashaevRoots kashaev_solve(const Rational& h, const Rational& hi, const Rational& hj,
                           const Rational& hk, const Rational& hij, const Rational& hik,
                           const Rational& hjk);

// The same quartic on symmetric-partition coordinates pi_(), pi_(i|i), ...,
// pi_(k,j,i|k,j,i); zero on Lagrangian coordinates.
Rational varkappa_residual(const PartitionFn& coords, int i, int j, int k);

} // namespace taulat
