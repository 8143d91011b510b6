#include "taulat/grassmann.hpp"

#include <algorithm>
#include <stdexcept>

#include "taulat/errors.hpp"

namespace taulat {

GrassmannianElement::GrassmannianElement(int k, int n, Matrix W)
    : k_(k), n_(n), W_(std::move(W)) {
    if (k < 1 || n <= k) throw std::invalid_argument("GrassmannianElement: need 1 <= k < n");
    if (W_.rows() != static_cast<std::size_t>(n) || W_.cols() != static_cast<std::size_t>(k))
        throw std::invalid_argument("GrassmannianElement: W must be n x k");
    if (W_.rank() != static_cast<std::size_t>(k))
        throw std::invalid_argument("GrassmannianElement: W must have full column rank");
}

Rational GrassmannianElement::plucker(const MultiIndex& L) const {
    if (static_cast<int>(L.size()) != k_)
        throw std::invalid_argument("plucker: multi-index must have k entries");
    std::vector<std::size_t> rows;
    rows.reserve(L.size());
    for (int e : L) {
        if (e < -k_ || e > n_ - k_ - 1)
            throw std::out_of_range("plucker: index outside [-k, n-k-1]");
        rows.push_back(static_cast<std::size_t>(e + k_));
    }
    std::vector<std::size_t> cols(static_cast<std::size_t>(k_));
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return W_.submatrix(rows, cols).det();
}

Rational GrassmannianElement::plucker(const Partition& lambda) const {
    return plucker(multiindex_from_partition(lambda, k_, n_));
}

LagrangianElement::LagrangianElement(int k, Matrix M) : k_(k), M_(std::move(M)) {
    if (k < 1) throw std::invalid_argument("LagrangianElement: k must be >= 1");
    if (M_.rows() != static_cast<std::size_t>(k) || M_.cols() != static_cast<std::size_t>(k))
        throw std::invalid_argument("LagrangianElement: M must be k x k");
    if (!M_.is_symmetric())
        throw std::invalid_argument("LagrangianElement: M must be symmetric");
}

Rational LagrangianElement::plucker(const Partition& lambda) const {
    if (!lambda.fits_in_rectangle(k_, k_))
        throw std::invalid_argument("LagrangianElement::plucker: " + lambda.str() +
                                    " outside the k x k square");
    auto [arms, legs] = lambda.frobenius();
    const std::size_t r = arms.size();
    Matrix sub(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const int lo = std::min(arms[i], legs[j]);
            const int hi = std::max(arms[i], legs[j]);
            sub.at(i, j) = M_.at(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));
        }
    return sub.det();
}

GrassmannianElement big_cell_embedding(const Matrix& M) {
    if (!M.is_square() || M.rows() == 0)
        throw std::invalid_argument("big_cell_embedding: M must be square and nonempty");
    const std::size_t k = M.rows();
    Matrix W(2 * k, k);
    for (std::size_t j = 0; j < k; ++j) W.at(j, j) = Rational(1);
    // column j of the lower block carries column k-j of M, with the
    // alternating row sign (-1)^(i-1) of the dual-basis convention
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const Rational entry = M.at(i, k - 1 - j);
            W.at(k + i, j) = (i % 2 == 0) ? entry : -entry;
        }
    return GrassmannianElement(static_cast<int>(k), static_cast<int>(2 * k), std::move(W));
}

GrassmannianElement lagrangian_to_grassmannian(const LagrangianElement& w0) {
    return big_cell_embedding(w0.affine_matrix());
}

CoordinateFn coordinates_of(const GrassmannianElement& w) {
    return [&w](const MultiIndex& L) { return w.plucker(L); };
}

CoordinateFn coordinates_of(const std::map<Partition, Rational>& values_in, int k, int n) {
    return [values = values_in, k, n](const MultiIndex& L) {
        const int sgn = sign_of_multiindex(L);
        if (sgn == 0) return Rational(0);
        const auto lambda = partition_from_multiindex(L, k, n);
        auto it = values.find(*lambda);
        if (it == values.end())
            throw MissingCoordinate(lambda->str());
        return sgn > 0 ? it->second : -it->second;
    };
}

Rational plucker_relation_residual(const CoordinateFn& coords, const MultiIndex& I,
                                   const MultiIndex& J) {
    if (I.size() + 2 != J.size())
        throw std::invalid_argument("plucker_relation_residual: need |I| = k-1, |J| = k+1");
    Rational acc(0);
    for (std::size_t j = 0; j < J.size(); ++j) {
        MultiIndex left = I;
        left.push_back(J[j]);
        MultiIndex right;
        right.reserve(J.size() - 1);
        for (std::size_t m = 0; m < J.size(); ++m)
            if (m != j) right.push_back(J[m]);
        const Rational term = coords(left) * coords(right);
        if ((j + 1) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Rational plucker_relation_residual(const GrassmannianElement& w, const MultiIndex& I,
                                   const MultiIndex& J) {
    return plucker_relation_residual(coordinates_of(w), I, J);
}

Rational giambelli_xi(const std::map<Partition, Rational>& hooks, const Rational& pi_empty,
                      const Partition& lambda) {
    if (pi_empty.is_zero())
        throw std::domain_error("giambelli_xi: pi_empty == 0 (not in the big cell)");
    auto [arms, legs] = lambda.frobenius();
    const std::size_t r = arms.size();
    Matrix ratios(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const Partition key = Partition::hook(arms[i], legs[j]);
            auto it = hooks.find(key);
            if (it == hooks.end())
                throw MissingCoordinate("hook " + key.str());
            ratios.at(i, j) = it->second / pi_empty;
        }
    return pi_empty * ratios.det();
}

} // namespace taulat
