#pragma once

#include <optional>
#include <string>
#include <vector>

namespace taulat {

// Integer partition: weakly decreasing positive parts; empty list is the
// empty partition.  Immutable value type.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    // 1-based part access; 0 past the end.
    int part(int i) const;

    Partition transpose() const;

    // Frobenius rank r = max{ i : lambda_i >= i }.
    int frobenius_rank() const;
    // Arm/leg lists (a_1 > ... > a_r >= 0 | b_1 > ... > b_r >= 0) with
    // a_i = lambda_i - i, b_i = lambda'_i - i.
    std::pair<std::vector<int>, std::vector<int>> frobenius() const;
    static Partition from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs);
    // Rank-1 case (a|b).
    static Partition hook(int arm, int leg);

    bool fits_in_rectangle(int rows, int cols) const;

    std::string str() const; // "(3,1,1)" or "()" for the empty partition

    friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }
    friend bool operator!=(const Partition& x, const Partition& y) { return !(x == y); }
    friend bool operator<(const Partition& x, const Partition& y) { return x.parts_ < y.parts_; }

private:
    std::vector<int> parts_;
};

// All partitions whose diagram fits in a rows x cols box, in a fixed
// deterministic order.
std::vector<Partition> partitions_in_rectangle(int rows, int cols);

// k-tuple of row indices L = (L_1,...,L_k), each in [-k, n-k-1] for the
// Grassmannian window it addresses; entries may repeat or be unordered.
using MultiIndex = std::vector<int>;

// 0 if L has a repeated entry, otherwise the sign of the permutation that
// sorts L increasingly.
int sign_of_multiindex(const MultiIndex& L);

// Strictly increasing L  ->  partition with lambda_i = L_{k-i+1} + i.
// Unordered distinct input is sorted first (combine with sign_of_multiindex);
// nullopt marks a repeated entry ("zero").  Throws if an entry leaves
// [-k, n-k-1].
std::optional<Partition> partition_from_multiindex(const MultiIndex& L, int k, int n);

// Inverse of the above on its domain; throws unless lambda fits in the
// k x (n-k) rectangle.
MultiIndex multiindex_from_partition(const Partition& lambda, int k, int n);

} // namespace taulat
