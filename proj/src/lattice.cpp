#include "taulat/lattice.hpp"

#include <stdexcept>

namespace taulat {

LatticePoint LatticePoint::alpha(int i) {
    LatticePoint p;
    p.support_[i] = 1;
    return p;
}

LatticePoint LatticePoint::beta(int i) {
    if (i < 1) throw std::invalid_argument("beta: index must be >= 1");
    LatticePoint p;
    p.support_[i - 1] = 1;
    p.support_[-i] = -1;
    return p;
}

LatticePoint LatticePoint::from_b3(int c1, int c2, int c3) {
    LatticePoint p;
    p.add(0, c1).add(-1, -c1);
    p.add(1, c2).add(-2, -c2);
    p.add(2, c3).add(-3, -c3);
    return p;
}

int LatticePoint::at(int i) const {
    auto it = support_.find(i);
    return it == support_.end() ? 0 : it->second;
}

LatticePoint& LatticePoint::add(int i, int count) {
    if (count == 0) return *this;
    auto [it, inserted] = support_.emplace(i, count);
    if (!inserted) {
        it->second += count;
        if (it->second == 0) support_.erase(it);
    }
    return *this;
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint out = a;
    for (auto [i, c] : b.support_) out.add(i, c);
    return out;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint out = a;
    for (auto [i, c] : b.support_) out.add(i, -c);
    return out;
}

LatticePoint LatticePoint::operator-() const {
    LatticePoint out;
    for (auto [i, c] : support_) out.support_[i] = -c;
    return out;
}

int LatticePoint::height() const {
    int h = 0;
    for (auto [i, c] : support_) h += c;
    return h;
}

bool LatticePoint::in_sublattice_B() const {
    for (auto [i, c] : support_) {
        const int mirror = (i >= 0) ? -(i + 1) : -i - 1; // pairs (i-1, -i)
        if (at(mirror) != -c) return false;
    }
    return true;
}

std::array<int, 3> LatticePoint::b3_coordinates() const {
    std::array<int, 3> c{at(0), at(1), at(2)};
    LatticePoint rebuilt = from_b3(c[0], c[1], c[2]);
    if (rebuilt != *this)
        throw std::invalid_argument("b3_coordinates: point outside span(beta_1, beta_2, beta_3)");
    return c;
}

std::string LatticePoint::str() const {
    std::string s = "{";
    bool first = true;
    for (auto [i, c] : support_) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(i) + ":" + std::to_string(c);
    }
    return s + "}";
}

LatticePoint frobenius_offset(const Partition& lambda) {
    auto [arms, legs] = lambda.frobenius();
    LatticePoint p;
    for (int a : arms) p.add(a, 1);
    for (int b : legs) p.add(-b - 1, -1);
    return p;
}

} // namespace taulat
