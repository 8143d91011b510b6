#include "taulat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace taulat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> t(static_cast<std::size_t>(parts_[0]), 0);
    for (int col = 1; col <= parts_[0]; ++col) {
        int count = 0;
        for (int p : parts_)
            if (p >= col) ++count;
        t[static_cast<std::size_t>(col - 1)] = count;
    }
    return Partition(std::move(t));
}

int Partition::frobenius_rank() const {
    int r = 0;
    while (r < length() && parts_[static_cast<std::size_t>(r)] >= r + 1) ++r;
    return r;
}

std::pair<std::vector<int>, std::vector<int>> Partition::frobenius() const {
    const int r = frobenius_rank();
    const Partition t = transpose();
    std::vector<int> arms(static_cast<std::size_t>(r)), legs(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) {
        arms[static_cast<std::size_t>(i - 1)] = part(i) - i;
        legs[static_cast<std::size_t>(i - 1)] = t.part(i) - i;
    }
    return {arms, legs};
}

Partition Partition::from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs) {
    if (arms.size() != legs.size())
        throw std::invalid_argument("from_frobenius: rank mismatch");
    const int r = static_cast<int>(arms.size());
    for (int i = 0; i + 1 < r; ++i)
        if (arms[static_cast<std::size_t>(i)] <= arms[static_cast<std::size_t>(i + 1)] ||
            legs[static_cast<std::size_t>(i)] <= legs[static_cast<std::size_t>(i + 1)])
            throw std::invalid_argument("from_frobenius: indices must strictly decrease");
    if (r > 0 && (arms.back() < 0 || legs.back() < 0))
        throw std::invalid_argument("from_frobenius: negative index");

    // Rebuild row lengths: lambda_i = a_i + i on the first r rows, then the
    // rows below the Durfee square are determined by the legs.
    std::vector<int> rows;
    for (int i = 1; i <= r; ++i) rows.push_back(arms[static_cast<std::size_t>(i - 1)] + i);
    const int depth = (r > 0) ? legs[0] + 1 : 0;
    for (int i = r + 1; i <= depth; ++i) {
        // row i has one cell for every leg reaching at least i-1 below the diagonal
        int len = 0;
        for (int j = 0; j < r; ++j)
            if (legs[static_cast<std::size_t>(j)] >= i - (j + 1)) ++len;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

Partition Partition::hook(int arm, int leg) {
    return from_frobenius({arm}, {leg});
}

bool Partition::fits_in_rectangle(int rows, int cols) const {
    return length() <= rows && (parts_.empty() || parts_[0] <= cols);
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void collect_partitions(int rows, int cols, int maxpart, std::vector<int>& acc,
                        std::vector<Partition>& out) {
    out.emplace_back(acc);
    if (static_cast<int>(acc.size()) == rows) return;
    for (int p = std::min(cols, maxpart); p >= 1; --p) {
        acc.push_back(p);
        collect_partitions(rows, cols, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_in_rectangle(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> acc;
    collect_partitions(rows, cols, cols, acc, out);
    return out;
}

int sign_of_multiindex(const MultiIndex& L) {
    const std::size_t k = L.size();
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (L[i] == L[j]) return 0;
            if (L[i] > L[j]) sign = -sign;
        }
    return sign;
}

std::optional<Partition> partition_from_multiindex(const MultiIndex& L, int k, int n) {
    if (static_cast<int>(L.size()) != k)
        throw std::invalid_argument("partition_from_multiindex: |L| != k");
    for (int e : L)
        if (e < -k || e > n - k - 1)
            throw std::out_of_range("partition_from_multiindex: entry outside [-k, n-k-1]");
    if (sign_of_multiindex(L) == 0) return std::nullopt;
    MultiIndex s = L;
    std::sort(s.begin(), s.end());
    std::vector<int> parts(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        parts[static_cast<std::size_t>(i - 1)] = s[static_cast<std::size_t>(k - i)] + i;
    return Partition(std::move(parts));
}

MultiIndex multiindex_from_partition(const Partition& lambda, int k, int n) {
    if (!lambda.fits_in_rectangle(k, n - k))
        throw std::invalid_argument("multiindex_from_partition: " + lambda.str() +
                                    " does not fit in " + std::to_string(k) + "x" +
                                    std::to_string(n - k));
    MultiIndex L(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        L[static_cast<std::size_t>(k - i)] = lambda.part(i) - i;
    return L;
}

} // namespace taulat
