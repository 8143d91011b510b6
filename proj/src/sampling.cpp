#include "taulat/sampling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace taulat {

std::uint64_t derive_seed(std::uint64_t base, const std::string& label, std::uint64_t index) {
    // FNV-1a over the label, folded with the base seed and stream index.
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ull;
    }
    h ^= base + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= index * 0xbf58476d1ce4e5b9ull;
    return h;
}

Rational random_rational(Rng& g, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(g), den(g));
}

Rational random_nonzero_rational(Rng& g, int max_num, int max_den) {
    for (;;) {
        Rational r = random_rational(g, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

std::vector<Rational> random_distinct_rationals(Rng& g, int count, bool positive) {
    std::set<Rational> seen;
    std::uniform_int_distribution<int> num(positive ? 1 : -(3 * count), 3 * count);
    std::uniform_int_distribution<int> den(1, 3);
    while (static_cast<int>(seen.size()) < count) {
        Rational r(num(g), den(g));
        if (positive && r.sign() <= 0) continue;
        seen.insert(r);
    }
    return {seen.begin(), seen.end()};
}

Matrix random_matrix(Rng& g, int rows, int cols) {
    Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = random_rational(g);
    return m;
}

Matrix random_symmetric_matrix(Rng& g, int k) {
    Matrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Rational r = random_rational(g);
            m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r;
            m.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = r;
        }
    return m;
}

GrassmannianElement random_element(Rng& g, int k, int n) {
    for (;;) {
        Matrix w = random_matrix(g, n, k);
        if (w.rank() == static_cast<std::size_t>(k))
            return GrassmannianElement(k, n, std::move(w));
    }
}

TimeVector random_time_vector(Rng& g, int truncation) {
    TimeVector t(truncation);
    for (int j = 1; j <= truncation; ++j) t.set(j, random_rational(g, 3, 3));
    return t;
}

LatticePoint random_a_point(Rng& g, int lo, int hi, int max_coeff) {
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    LatticePoint p;
    for (int i = lo; i <= hi; ++i) p.add(i, coeff(g));
    return p;
}

LatticePoint random_b_point(Rng& g, int count, int max_coeff) {
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    LatticePoint p;
    for (int i = 1; i <= count; ++i) {
        const int c = coeff(g);
        p.add(i - 1, c);
        p.add(-i, -c);
    }
    return p;
}

XParameters random_x_parameters(Rng& g, int lo, int hi) {
    auto values = random_distinct_rationals(g, hi - lo + 1);
    std::shuffle(values.begin(), values.end(), g);
    std::map<int, Rational> x;
    int idx = lo;
    for (const Rational& v : values) x[idx++] = v;
    return XParameters(std::move(x));
}

YParameters random_y_parameters(Rng& g, int count) {
    auto values = random_distinct_rationals(g, count, /*positive=*/true);
    std::shuffle(values.begin(), values.end(), g);
    std::map<int, Rational> y;
    int idx = 1;
    for (const Rational& v : values) y[idx++] = v;
    return YParameters(std::move(y));
}

namespace {

void increasing_tuples(int len, int lo, int hi, MultiIndex& acc,
                       std::vector<MultiIndex>& out) {
    if (static_cast<int>(acc.size()) == len) {
        out.push_back(acc);
        return;
    }
    const int start = acc.empty() ? lo : acc.back() + 1;
    for (int e = start; e <= hi; ++e) {
        acc.push_back(e);
        increasing_tuples(len, lo, hi, acc, out);
        acc.pop_back();
    }
}

std::vector<MultiIndex> all_increasing_tuples(int len, int lo, int hi) {
    std::vector<MultiIndex> out;
    MultiIndex acc;
    increasing_tuples(len, lo, hi, acc, out);
    return out;
}

} // namespace

std::vector<std::pair<MultiIndex, MultiIndex>> all_plucker_relation_indices(int k, int n) {
    const int lo = -k, hi = n - k - 1;
    std::vector<std::pair<MultiIndex, MultiIndex>> out;
    for (const auto& I : all_increasing_tuples(k - 1, lo, hi))
        for (const auto& J : all_increasing_tuples(k + 1, lo, hi))
            out.emplace_back(I, J);
    return out;
}

std::vector<std::pair<MultiIndex, MultiIndex>> short_plucker_relation_indices(int k, int n) {
    const int lo = -k, hi = n - k - 1;
    std::vector<std::pair<MultiIndex, MultiIndex>> out;
    for (const auto& C : all_increasing_tuples(k - 2, lo, hi))
        for (const auto& D : all_increasing_tuples(3, lo, hi)) {
            if (std::any_of(D.begin(), D.end(), [&C](int d) {
                    return std::binary_search(C.begin(), C.end(), d);
                }))
                continue;
            for (int e = lo; e <= hi; ++e) {
                if (std::binary_search(C.begin(), C.end(), e)) continue;
                if (std::binary_search(D.begin(), D.end(), e)) continue;
                MultiIndex I = C;
                I.push_back(e);
                std::sort(I.begin(), I.end());
                MultiIndex J = C;
                J.insert(J.end(), D.begin(), D.end());
                std::sort(J.begin(), J.end());
                out.emplace_back(std::move(I), std::move(J));
            }
        }
    return out;
}

} // namespace taulat
