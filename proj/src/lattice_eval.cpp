#include "taulat/lattice_eval.hpp"

#include <stdexcept>

#include "taulat/errors.hpp"

namespace taulat {

XParameters::XParameters(std::map<int, Rational> values) : values_(std::move(values)) {
    for (auto i = values_.begin(); i != values_.end(); ++i) {
        auto j = i;
        for (++j; j != values_.end(); ++j)
            if (i->second == j->second)
                throw std::invalid_argument("XParameters: x_" + std::to_string(i->first) +
                                            " == x_" + std::to_string(j->first));
    }
}

const Rational& XParameters::at(int i) const {
    auto it = values_.find(i);
    if (it == values_.end())
        throw std::out_of_range("XParameters: x_" + std::to_string(i) + " not assigned");
    return it->second;
}

YParameters::YParameters(std::map<int, Rational> values) : values_(std::move(values)) {
    for (auto& [i, y] : values_) {
        if (i < 1) throw std::invalid_argument("YParameters: indices start at 1");
        if (y.sign() <= 0)
            throw std::invalid_argument("YParameters: y_" + std::to_string(i) +
                                        " must be strictly positive");
    }
    for (auto i = values_.begin(); i != values_.end(); ++i) {
        auto j = i;
        for (++j; j != values_.end(); ++j)
            if (i->second == j->second)
                throw std::invalid_argument("YParameters: y_" + std::to_string(i->first) +
                                            " == y_" + std::to_string(j->first));
    }
}

const Rational& YParameters::at(int i) const {
    auto it = values_.find(i);
    if (it == values_.end())
        throw std::out_of_range("YParameters: y_" + std::to_string(i) + " not assigned");
    return it->second;
}

XParameters YParameters::specialize_x(int range) const {
    std::map<int, Rational> x;
    for (int i = 0; i < range; ++i) x[i] = at(i + 1);
    for (int i = -1; i >= -range; --i) x[i] = -at(-i);
    return XParameters(std::move(x));
}

HLattice::HLattice(std::shared_ptr<const TauEvaluator> tau, XParameters params, TimeVector base)
    : tau_(std::move(tau)), params_(std::move(params)), base_(std::move(base)) {}

HLattice::HLattice(const GrassmannianElement& w, XParameters params, TimeVector base)
    : HLattice(std::make_shared<TauEvaluator>(w), std::move(params), std::move(base)) {}

Rational HLattice::evaluate(const LatticePoint& n, const TimeVector& t) const {
    Rational prefactor(1);
    const auto& supp = n.support();
    for (auto i = supp.begin(); i != supp.end(); ++i) {
        auto j = i;
        for (++j; j != supp.end(); ++j) {
            const long e = static_cast<long>(i->second) * j->second;
            prefactor *= (params_.at(i->first) - params_.at(j->first)).pow(e);
        }
    }
    TimeVector shifted = t;
    for (auto [i, c] : supp)
        shifted = miwa_shift(shifted, params_.at(i), c);
    ++evals_;
    return prefactor * (*tau_)(shifted);
}

Rational HLattice::at(const LatticePoint& n) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
    }
    Rational value = evaluate(n, base_);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(n, std::move(value)).first->second;
}

Rational HLattice::at(const LatticePoint& n, const Partition& lambda) const {
    return at(n + frobenius_offset(lambda));
}

Rational HLattice::at_shifted(const LatticePoint& n, const Rational& x, long m) const {
    return evaluate(n, miwa_shift(base_, x, m));
}

Rational shift_lemma_residual(const HLattice& H, const LatticePoint& n, int i) {
    const Rational lhs = H.at(n + LatticePoint::alpha(i));
    long sign_exp = 0;
    Rational factor(1);
    for (auto [j, c] : n.support()) {
        if (j < i) sign_exp += c;
        if (j != i)
            factor *= (H.params().at(i) - H.params().at(j)).pow(c);
    }
    return lhs - minus_one_pow(sign_exp) * factor * H.at_shifted(n, H.params().at(i), 1);
}

LagrangianLattice::LagrangianLattice(const LagrangianElement& w0, YParameters params,
                                     CkpTimeVector base)
    : tau_(std::make_shared<TauEvaluator>(lagrangian_to_grassmannian(w0))),
      params_(std::move(params)),
      base_(base.full()) {}

Rational LagrangianLattice::at(const LatticePoint& n) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
    }

    // two views of the support: m_i = n_{i-1} (flows along +y_i) and
    // l_i = n_{-i} (flows along -y_i)
    std::map<int, int> pos, neg;
    for (auto [idx, c] : n.support()) {
        if (idx >= 0)
            pos[idx + 1] = c;
        else
            neg[-idx] = c;
    }

    Rational prefactor(1);
    for (auto i = pos.begin(); i != pos.end(); ++i) {
        auto j = i;
        for (++j; j != pos.end(); ++j)
            prefactor *= (params_.at(i->first) - params_.at(j->first))
                             .pow(static_cast<long>(i->second) * j->second);
    }
    for (auto i = neg.begin(); i != neg.end(); ++i) {
        auto j = i;
        for (++j; j != neg.end(); ++j)
            prefactor *= (params_.at(i->first) - params_.at(j->first))
                             .pow(static_cast<long>(i->second) * j->second);
    }
    long sign_exp = 0;
    for (auto [i, li] : neg)
        for (auto [j, mj] : pos) {
            const long e = static_cast<long>(li) * mj;
            sign_exp += e;
            prefactor *= (params_.at(i) + params_.at(j)).pow(e);
        }

    TimeVector shifted = base_;
    for (auto [j, mj] : pos) shifted = miwa_shift(shifted, params_.at(j), mj);
    for (auto [i, li] : neg) shifted = miwa_shift(shifted, -params_.at(i), li);

    ++evals_;
    Rational value = minus_one_pow(sign_exp) * prefactor * (*tau_)(shifted);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(n, std::move(value)).first->second;
}

Rational LagrangianLattice::at(const LatticePoint& n, const Partition& lambda) const {
    return at(n + frobenius_offset(lambda));
}

Rational LagrangianLattice::checkerboard(const LatticePoint& nprime, CheckerKind kind) const {
    const auto c = nprime.b3_coordinates();
    const long n1 = c[0], n2 = c[1], n3 = c[2];
    long exp = 0;
    Partition lambda;
    switch (kind) {
        case CheckerKind::plain:
            exp = n1 + n2 + n3 + n1 * n2 + n1 * n3 + n2 * n3;
            lambda = Partition{};
            break;
        case CheckerKind::x:
            exp = n1 * n1 + n2 * n3 + n3 * n3;
            lambda = Partition::hook(1, 2);
            break;
        case CheckerKind::y:
            exp = n1 * n3 + n3 * n3;
            lambda = Partition::hook(0, 2);
            break;
        case CheckerKind::z:
            exp = n1 * n2 + n2 * n2 + n3 * n3;
            lambda = Partition::hook(0, 1);
            break;
    }
    return minus_one_pow(exp) * at(nprime, lambda);
}

} // namespace taulat
