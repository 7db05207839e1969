#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gieseker/parameter.hpp"

namespace gieseker {

/// Unordered collection (n_1, ..., n_k) of positive integers, stored descending.
class LeafLabel {
public:
    LeafLabel() = default;
    explicit LeafLabel(std::vector<int> collection);

    const std::vector<int>& collection() const noexcept { return parts_; }
    int total() const noexcept;
    std::string to_string() const;

    friend bool operator==(const LeafLabel&, const LeafLabel&) = default;

private:
    std::vector<int> parts_;
};

/// dim of the reduced quotient variety of (a, r): 2ra - 2.
int reduced_variety_dimension(int a, int r);

/// Symplectic leaves for (n, r), r >= 2: all collections with sum <= n. Ordered
/// by number of parts, then lexicographically ascending on the sorted parts.
std::vector<LeafLabel> enumerate_leaves(int n, int r);

/// (2rn - 2) - sum_i (2r n_i - 2), reduced convention.
int leaf_dimension(const LeafLabel& leaf, int n, int r);
/// Same with the unreduced convention (adds 2).
int leaf_dimension_unreduced(const LeafLabel& leaf, int n, int r);

struct ChainEntry {
    int index = 0;                     // i in J_i
    LeafLabel leaf;                    // (m^i)
    std::optional<int> variety_dim;    // reduced convention; omitted for r = 1
};

struct IdealChain {
    int n = 0;
    int r = 0;
    std::optional<long> m;  // nullopt: infinite (irrational or denominator > n)
    bool simple = true;
    std::vector<ChainEntry> entries;  // J_1 ... J_{floor(n/m)}, innermost first
};

/// Proper two-sided ideals J_1 < ... < J_{floor(n/m)}; simple when the global
/// dimension is infinite or m > n.
IdealChain ideal_chain(int n, int r, const ParameterValue& lambda);

// Antichain calculus for two-sided ideals of a k-fold tensor power.
//
// Subsets of {1..k} are bitmasks (bit i-1 <-> index i). In intersection form an
// antichain {L_1..L_p} denotes the intersection of the primes I_{L_j}; the
// empty antichain is the whole algebra and {emptyset} is the zero ideal. In sum
// form it denotes the sum of the products I^{L_j}; there the empty antichain is
// zero and {emptyset} is the whole algebra. The two forms are exchanged by
// taking minimal transversals.

using Subset = std::uint32_t;

enum class AntichainForm { intersection, sum };

inline constexpr int max_antichain_k = 20;
inline constexpr int max_count_k = 5;

class IdealAntichain {
public:
    IdealAntichain(int k, std::vector<Subset> members, AntichainForm form = AntichainForm::intersection);

    int k() const noexcept { return k_; }
    AntichainForm form() const noexcept { return form_; }
    /// Minimal members, sorted by their index lists lexicographically.
    const std::vector<Subset>& members() const noexcept { return members_; }

    bool is_whole_algebra() const;
    bool is_zero() const;

    /// "[[1],[2]]": sorted lists of sorted 1-based indices.
    std::string to_string() const;

    friend bool operator==(const IdealAntichain&, const IdealAntichain&) = default;

private:
    int k_;
    std::vector<Subset> members_;
    AntichainForm form_;
};

/// Keep only inclusion-minimal members.
IdealAntichain antichain_normalize(const std::vector<Subset>& subsets, int k,
                                   AntichainForm form = AntichainForm::intersection);

IdealAntichain to_sum_form(const IdealAntichain& a);
IdealAntichain to_intersection_form(const IdealAntichain& a);

/// Results are returned in intersection form; inputs may be in either form.
IdealAntichain intersect(const IdealAntichain& a, const IdealAntichain& b);
IdealAntichain sum(const IdealAntichain& a, const IdealAntichain& b);
/// Every ideal is idempotent and semiprime, so the product is the intersection.
IdealAntichain product(const IdealAntichain& a, const IdealAntichain& b);

/// Ideal containment a subset-of b.
bool contains(const IdealAntichain& outer, const IdealAntichain& inner);

/// All ideals for the given k, in intersection form (k <= max_count_k).
std::vector<IdealAntichain> enumerate_ideals(int k);
/// Number of ideals, including the zero ideal and the whole algebra (k <= max_count_k).
long long count_ideals(int k);

/// Minimal subsets meeting every member of `family`.
std::vector<Subset> minimal_transversals(const std::vector<Subset>& family, int k);

std::vector<int> subset_indices(Subset s);
Subset subset_from_indices(const std::vector<int>& indices, int k);

/// Parses "[[1],[2]]" into a normalized antichain.
IdealAntichain parse_antichain(std::string_view text, int k, AntichainForm form = AntichainForm::intersection);

}  // namespace gieseker
