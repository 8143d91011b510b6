#include "taulat/times.hpp"

#include <stdexcept>

namespace taulat {

namespace {
const Rational kZero(0);
}

const Rational& TimeVector::at(int j) const {
    if (j < 1) throw std::out_of_range("TimeVector: index must be >= 1");
    if (j > truncation()) return kZero;
    return t_[static_cast<std::size_t>(j - 1)];
}

void TimeVector::set(int j, Rational value) {
    if (j < 1 || j > truncation())
        throw std::out_of_range("TimeVector::set: index outside truncation");
    t_[static_cast<std::size_t>(j - 1)] = std::move(value);
}

TimeVector TimeVector::tilde() const {
    TimeVector out = *this;
    for (int j = 2; j <= truncation(); j += 2)
        out.set(j, -at(j));
    return out;
}

TimeVector miwa_shift(const TimeVector& t, const Rational& x, long m) {
    if (m == 0 || x.is_zero()) return t;
    TimeVector out = t;
    Rational xpow(1);
    for (int j = 1; j <= t.truncation(); ++j) {
        xpow *= x;
        out.set(j, out.at(j) + Rational(m) * xpow / Rational(j));
    }
    return out;
}

CkpTimeVector::CkpTimeVector(TimeVector t) : t_(std::move(t)) {
    for (int j = 2; j <= t_.truncation(); j += 2)
        if (!t_.at(j).is_zero())
            throw std::invalid_argument("CkpTimeVector: even entry t_" + std::to_string(j) +
                                        " must be zero");
}

void CkpTimeVector::set_odd(int j, Rational value) {
    if (j % 2 == 0)
        throw std::invalid_argument("CkpTimeVector: even entries are structurally zero");
    t_.set(j, std::move(value));
}

std::vector<Rational> homogeneous_from_times(const TimeVector& t, int maxdeg) {
    if (maxdeg < 0) throw std::invalid_argument("homogeneous_from_times: maxdeg < 0");
    if (maxdeg > t.truncation())
        throw std::invalid_argument("homogeneous_from_times: truncation insufficient (maxdeg " +
                                    std::to_string(maxdeg) + " > T " +
                                    std::to_string(t.truncation()) + ")");
    std::vector<Rational> h(static_cast<std::size_t>(maxdeg) + 1);
    h[0] = Rational(1);
    for (int m = 1; m <= maxdeg; ++m) {
        Rational acc(0);
        for (int i = 1; i <= m; ++i) {
            const Rational& ti = t.at(i);
            if (ti.is_zero()) continue;
            acc += Rational(i) * ti * h[static_cast<std::size_t>(m - i)];
        }
        h[static_cast<std::size_t>(m)] = acc / Rational(m);
    }
    return h;
}

} // namespace taulat
