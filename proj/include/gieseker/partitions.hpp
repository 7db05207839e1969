#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gieseker {

/// Weakly decreasing sequence of positive integers. Trailing zeros are never
/// stored, so two partitions are equal iff their part vectors are equal.
class Partition {
public:
    Partition() = default;
    /// Accepts any weakly decreasing nonnegative sequence; trailing zeros are
    /// dropped. Throws std::invalid_argument otherwise.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return size_; }
    /// i-th part (0-based), zero past the end.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    Partition transpose() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// r-tuple of partitions; empty components are allowed.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components);

    const std::vector<Partition>& components() const noexcept { return components_; }
    const Partition& operator[](std::size_t i) const { return components_.at(i); }
    int rank() const noexcept { return static_cast<int>(components_.size()); }
    int size() const noexcept { return size_; }
    std::string to_string() const;

    friend bool operator==(const Multipartition&, const Multipartition&) = default;
    friend auto operator<=>(const Multipartition& a, const Multipartition& b) {
        return a.components_ <=> b.components_;
    }

private:
    std::vector<Partition> components_;
    int size_ = 0;
};

struct Division {
    Partition quotient;
    Partition remainder;
};

/// Hook h_{i,d}: slot i (1-based) holds (n+1-d, 1^{d-1}), all other slots empty.
struct Hook {
    int component = 1;
    int leg = 1;

    Multipartition realize(int n, int r) const;
    std::string name() const;
    friend bool operator==(const Hook&, const Hook&) = default;
};

/// All partitions of n in lexicographically descending order.
std::vector<Partition> enumerate_partitions(int n);

/// All r-multipartitions of n. Ordered by |first component| descending, then
/// recursively, each component running through enumerate_partitions order.
std::vector<Multipartition> enumerate_multipartitions(int n, int r);

/// Number of partitions of n.
long long partition_count(int n);

/// Write lambda = m*q + rem componentwise with q, rem partitions and |q| maximal.
/// The maximum is unique: every admissible q satisfies
/// q_i - q_{i+1} <= floor((lambda_i - lambda_{i+1}) / m), and taking each gap at
/// its bound is admissible.
Division divide_with_remainder(const Partition& lambda, int m);

/// Hooks for (n, r) in the order h_{1,n} > h_{1,n-1} > ... > h_{1,1} > h_{2,n} > ... > h_{r,1}.
std::vector<Hook> hooks(int n, int r);

/// True when exactly one component is nonempty and it is hook shaped.
bool is_hook(const Multipartition& sigma);

/// "8,6,1" or "-" for the empty partition.
Partition parse_partition(std::string_view text);
/// Components joined by '|', e.g. "8,6,1|2|-".
Multipartition parse_multipartition(std::string_view text);

}  // namespace gieseker
