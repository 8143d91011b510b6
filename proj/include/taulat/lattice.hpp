#pragma once

#include <array>
#include <map>
#include <string>

#include "taulat/partition.hpp"

namespace taulat {

// Finitely supported integer vector on Z: an element of the free abelian
// group A.  Sparse, immutable-style value type; zero entries are never stored.
class LatticePoint {
public:
    LatticePoint() = default;

    // alpha_i: 1 in position i, 0 elsewhere.
    static LatticePoint alpha(int i);
    // beta_i = alpha_{i-1} - alpha_{-i}, i >= 1: the generators of the
    // sublattice B.
    static LatticePoint beta(int i);
    // c1*beta_1 + c2*beta_2 + c3*beta_3 (the 3-dimensional sublattice B3).
    static LatticePoint from_b3(int c1, int c2, int c3);

    int at(int i) const;
    const std::map<int, int>& support() const { return support_; }

    LatticePoint& add(int i, int count);

    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
    LatticePoint operator-() const;

    // Sum of all components.
    int height() const;

    // n_{-i} == -n_{i-1} for all i >= 1.
    bool in_sublattice_B() const;

    // B3 coordinates (along beta_1, beta_2, beta_3); throws if the point is
    // not in the span of those generators.
    std::array<int, 3> b3_coordinates() const;

    std::string str() const; // "{-1:-1, 0:1}" style, ordered by index

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.support_ == b.support_; }
    friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) { return a.support_ < b.support_; }

private:
    std::map<int, int> support_;
};

// Frobenius offset of a partition: sum of alpha_{a_i} minus sum of
// alpha_{-b_i-1} over the Frobenius indices (a|b) of lambda.
LatticePoint frobenius_offset(const Partition& lambda);

} // namespace taulat
