#include "taulat/tau.hpp"

#include <set>
#include <stdexcept>

namespace taulat {

Rational schur_at(const Partition& lambda, const TimeVector& t) {
    const int l = lambda.length();
    if (l == 0) return Rational(1);
    const int maxdeg = lambda.part(1) + l - 1;
    if (maxdeg > t.truncation())
        throw std::invalid_argument("schur_at: truncation insufficient for " + lambda.str());
    const auto h = homogeneous_from_times(t, maxdeg);
    Matrix jt(static_cast<std::size_t>(l), static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            const int deg = lambda.part(i) - i + j;
            jt.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                (deg < 0) ? Rational(0) : h[static_cast<std::size_t>(deg)];
        }
    return jt.det();
}

TauEvaluator::TauEvaluator(GrassmannianElement w) : w_(std::move(w)) {
    const int k = w_.k(), n = w_.n();
    for (const Partition& lambda : partitions_in_rectangle(k, n - k)) {
        Term term;
        term.coefficient = w_.plucker(lambda);
        if (term.coefficient.is_zero()) continue;
        term.size = lambda.length();
        term.jt_degrees.reserve(static_cast<std::size_t>(term.size * term.size));
        for (int i = 1; i <= term.size; ++i)
            for (int j = 1; j <= term.size; ++j) {
                const int deg = lambda.part(i) - i + j;
                term.jt_degrees.push_back(deg);
                if (deg > max_h_degree_) max_h_degree_ = deg;
            }
        terms_.push_back(std::move(term));
    }
}

Rational TauEvaluator::operator()(const TimeVector& t) const {
    if (t.truncation() < min_truncation())
        throw std::invalid_argument("tau_eval: truncation insufficient (need T >= n-1)");
    const auto h = homogeneous_from_times(t, max_h_degree_);
    Rational acc(0);
    for (const Term& term : terms_) {
        const int l = term.size;
        if (l == 0) {
            acc += term.coefficient;
            continue;
        }
        Matrix jt(static_cast<std::size_t>(l), static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                const int deg = term.jt_degrees[static_cast<std::size_t>(i * l + j)];
                jt.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    (deg < 0) ? Rational(0) : h[static_cast<std::size_t>(deg)];
            }
        acc += term.coefficient * jt.det();
    }
    return acc;
}

Rational tau_eval(const GrassmannianElement& w, const TimeVector& t) {
    return TauEvaluator(w)(t);
}

Rational zeta(const TauEvaluator& tau, const TimeVector& t, const std::vector<Rational>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j])
                throw std::invalid_argument("zeta: repeated parameter " + xs[i].str());
    Rational prefactor(1);
    TimeVector shifted = t;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            prefactor *= xs[i] - xs[j];
        shifted = miwa_shift(shifted, xs[i], 1);
    }
    return prefactor * tau(shifted);
}

Rational addition_formula_residual(const TauEvaluator& tau, const TimeVector& t,
                                   const std::vector<Rational>& xs,
                                   const std::vector<Rational>& ys) {
    if (xs.size() + 2 != ys.size())
        throw std::invalid_argument("addition_formula_residual: need |xs| = k-1, |ys| = k+1");
    std::set<Rational> all(xs.begin(), xs.end());
    all.insert(ys.begin(), ys.end());
    if (all.size() != xs.size() + ys.size())
        throw std::invalid_argument("addition_formula_residual: parameters must be distinct");

    Rational acc(0);
    for (std::size_t j = 0; j < ys.size(); ++j) {
        std::vector<Rational> left = xs;
        left.push_back(ys[j]);
        std::vector<Rational> right;
        right.reserve(ys.size() - 1);
        for (std::size_t m = 0; m < ys.size(); ++m)
            if (m != j) right.push_back(ys[m]);
        const Rational term = zeta(tau, t, left) * zeta(tau, t, right);
        if ((j + 1) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Rational ckp_symmetry_residual(const LagrangianElement& w0, const TimeVector& t) {
    TauEvaluator tau(lagrangian_to_grassmannian(w0));
    return tau(t) - tau(t.tilde());
}

} // namespace taulat
