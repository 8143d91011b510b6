#pragma once

#include <vector>

#include "taulat/rational.hpp"

namespace taulat {

// Truncated flow vector (t_1, ..., t_T); entries beyond T are exactly zero.
class TimeVector {
public:
    TimeVector() = default;
    explicit TimeVector(int truncation) : t_(static_cast<std::size_t>(truncation)) {}
    explicit TimeVector(std::vector<Rational> entries) : t_(std::move(entries)) {}

    int truncation() const { return static_cast<int>(t_.size()); }
    // 1-based; exact zero past the truncation order.
    const Rational& at(int j) const;
    void set(int j, Rational value);
    const std::vector<Rational>& entries() const { return t_; }

    // t with the sign of every even-indexed entry flipped.
    TimeVector tilde() const;

    friend bool operator==(const TimeVector& a, const TimeVector& b) { return a.t_ == b.t_; }
    friend bool operator<(const TimeVector& a, const TimeVector& b) { return a.t_ < b.t_; }

private:
    std::vector<Rational> t_;
};

// t_j += m * x^j / j for 1 <= j <= T.  Shifts for different x commute.
TimeVector miwa_shift(const TimeVector& t, const Rational& x, long m);

// Flow vector with all even entries structurally zero (the odd-flow
// restriction).  Odd entries are t_1, t_3, t_5, ...
class CkpTimeVector {
public:
    explicit CkpTimeVector(int truncation) : t_(truncation) {}
    // Accepts a full vector whose even entries must all be zero.
    explicit CkpTimeVector(TimeVector t);

    int truncation() const { return t_.truncation(); }
    void set_odd(int j, Rational value); // j odd
    const TimeVector& full() const { return t_; }

private:
    TimeVector t_;
};

// Coefficients (h_0, ..., h_maxdeg) of exp(sum_j t_j z^j), computed by the
// Newton-type recurrence m h_m = sum_{i=1..m} i t_i h_{m-i}.  Requires
// maxdeg <= T so the truncation cannot drop contributing terms.
std::vector<Rational> homogeneous_from_times(const TimeVector& t, int maxdeg);

} // namespace taulat
