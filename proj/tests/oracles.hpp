#pragma once

// Test-only oracles, independent of the library's evaluation paths.

#include <algorithm>
#include <vector>

#include "taulat/grassmann.hpp"
#include "taulat/sampling.hpp"
#include "taulat/tau.hpp"

namespace oracles {

using taulat::GrassmannianElement;
using taulat::Matrix;
using taulat::MultiIndex;
using taulat::Partition;
using taulat::Rational;
using taulat::TimeVector;

// Permutation sign by explicit bubble sort (transposition count).
inline int sign_by_bubble_sort(MultiIndex L) {
    int swaps = 0;
    for (std::size_t i = 0; i + 1 < L.size(); ++i)
        for (std::size_t j = 0; j + 1 < L.size() - i; ++j) {
            if (L[j] == L[j + 1]) return 0;
            if (L[j] > L[j + 1]) {
                std::swap(L[j], L[j + 1]);
                ++swaps;
            }
        }
    return swaps % 2 == 0 ? 1 : -1;
}

// Maya-diagram conversion: the 01 word of the rotated diagram boundary read
// off the occupied row set {L_1,...,L_k}.
inline Partition partition_by_maya(const MultiIndex& sorted_L, int k, int n) {
    std::vector<int> parts;
    // row i of the diagram counts the vacancies below the i-th highest particle
    std::vector<int> occ(sorted_L.rbegin(), sorted_L.rend()); // decreasing
    for (int i = 0; i < k; ++i) {
        int vacancies = 0;
        for (int level = -k; level < occ[static_cast<std::size_t>(i)]; ++level)
            if (!std::binary_search(sorted_L.begin(), sorted_L.end(), level)) ++vacancies;
        (void)n;
        if (vacancies > 0) parts.push_back(vacancies);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

// Frobenius data measured on the drawn Young diagram.
inline std::pair<std::vector<int>, std::vector<int>> frobenius_by_diagram(const Partition& p) {
    auto cell = [&p](int row, int col) { return col < p.part(row + 1); }; // 0-based
    std::vector<int> arms, legs;
    for (int d = 0; cell(d, d); ++d) {
        int arm = 0;
        while (cell(d, d + 1 + arm)) ++arm;
        int leg = 0;
        while (cell(d + 1 + leg, d)) ++leg;
        arms.push_back(arm);
        legs.push_back(leg);
    }
    return {arms, legs};
}

// Cofactor-expansion determinant (reference for the elimination path).
inline Rational det_by_cofactors(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<std::size_t> rows, cols;
        for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        const Rational minor = det_by_cofactors(m.submatrix(rows, cols));
        acc += (j % 2 == 0 ? m.at(0, j) : -m.at(0, j)) * minor;
    }
    return acc;
}

// Truncated series exp(sum_j t_j z^j) by direct power accumulation.
inline std::vector<Rational> h_by_series_exp(const TimeVector& t, int maxdeg) {
    std::vector<Rational> arg(static_cast<std::size_t>(maxdeg) + 1);
    for (int j = 1; j <= std::min(maxdeg, t.truncation()); ++j)
        arg[static_cast<std::size_t>(j)] = t.at(j);
    std::vector<Rational> result(static_cast<std::size_t>(maxdeg) + 1);
    result[0] = Rational(1);
    std::vector<Rational> power(static_cast<std::size_t>(maxdeg) + 1);
    power[0] = Rational(1);
    Rational factorial(1);
    for (int r = 1; r <= maxdeg; ++r) {
        // power <- power * arg (truncated)
        std::vector<Rational> next(static_cast<std::size_t>(maxdeg) + 1);
        for (int d = 0; d <= maxdeg; ++d) {
            if (power[static_cast<std::size_t>(d)].is_zero()) continue;
            for (int e = 1; d + e <= maxdeg; ++e)
                next[static_cast<std::size_t>(d + e)] +=
                    power[static_cast<std::size_t>(d)] * arg[static_cast<std::size_t>(e)];
        }
        power = std::move(next);
        factorial *= Rational(r);
        for (int d = 0; d <= maxdeg; ++d)
            result[static_cast<std::size_t>(d)] += power[static_cast<std::size_t>(d)] / factorial;
    }
    return result;
}

// Bialternant Schur polynomial det(x_i^(lambda_j + p - j)) / Vandermonde.
inline Rational schur_by_bialternant(const Partition& lambda, const std::vector<Rational>& xs) {
    const int p = static_cast<int>(xs.size());
    if (lambda.length() > p) return Rational(0);
    Matrix num(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
    Matrix den(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            num.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                xs[static_cast<std::size_t>(i)].pow(lambda.part(j + 1) + p - (j + 1));
            den.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                xs[static_cast<std::size_t>(i)].pow(p - (j + 1));
        }
    return num.det() / den.det();
}

// tau as det of the banded h-matrix applied to W (Cauchy-Binet dual of the
// coordinate expansion): B_{p j} = sum_i h_{i-p}(t) W_{i j}, p = 1..k.
inline Rational tau_by_band_determinant(const GrassmannianElement& w, const TimeVector& t) {
    const int k = w.k(), n = w.n();
    const auto h = taulat::homogeneous_from_times(t, n - 1);
    Matrix band(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (int p = 1; p <= k; ++p)
        for (int i = 1; i <= n; ++i) {
            const int deg = i - p;
            band.at(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(i - 1)) =
                (deg < 0) ? Rational(0) : h[static_cast<std::size_t>(deg)];
        }
    return (band * w.coordinates()).det();
}

} // namespace oracles
