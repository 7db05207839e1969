#include "gieseker/ideal_lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <json.hpp>
#include <numeric>
#include <stdexcept>

#include "gieseker/diagnostics.hpp"
#include "gieseker/errors.hpp"
#include "gieseker/partitions.hpp"

namespace gieseker {

LeafLabel::LeafLabel(std::vector<int> collection) : parts_(std::move(collection)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("leaf collection entries must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int LeafLabel::total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string LeafLabel::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

int reduced_variety_dimension(int a, int r) { return 2 * r * a - 2; }

std::vector<LeafLabel> enumerate_leaves(int n, int r) {
    if (n < 1) throw std::invalid_argument("enumerate_leaves: n must be positive");
    if (r < 2)
        throw HypothesisError("leaf classification by collections with sum <= n needs r > 1",
                              "symplectic leaves of the reduced Gieseker variety, r > 1");
    std::vector<std::vector<int>> raw;
    for (int s = 0; s <= n; ++s)
        for (const auto& p : enumerate_partitions(s)) raw.push_back(p.parts());
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<LeafLabel> out;
    out.reserve(raw.size());
    for (auto& c : raw) out.emplace_back(std::move(c));
    return out;
}

int leaf_dimension(const LeafLabel& leaf, int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("leaf_dimension: need n, r >= 1");
    if (leaf.total() > n) throw std::invalid_argument("leaf_dimension: collection sum exceeds n");
    int dim = reduced_variety_dimension(n, r);
    for (int ni : leaf.collection()) dim -= reduced_variety_dimension(ni, r);
    return dim;
}

int leaf_dimension_unreduced(const LeafLabel& leaf, int n, int r) { return leaf_dimension(leaf, n, r) + 2; }

IdealChain ideal_chain(int n, int r, const ParameterValue& lambda) {
    IdealChain chain;
    chain.n = n;
    chain.r = r;
    chain.m = lambda.denominator(n);
    if (!has_finite_global_dimension(n, r, lambda) || !chain.m) return chain;
    const int m = static_cast<int>(*chain.m);
    const int length = n / m;
    chain.simple = length == 0;
    for (int i = 1; i <= length; ++i) {
        ChainEntry e;
        e.index = i;
        e.leaf = LeafLabel(std::vector<int>(static_cast<std::size_t>(i), m));
        if (r >= 2) e.variety_dim = leaf_dimension(e.leaf, n, r);
        chain.entries.push_back(std::move(e));
    }
    return chain;
}

// ---- antichains -----------------------------------------------------------

std::vector<int> subset_indices(Subset s) {
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1u) out.push_back(i + 1);
    return out;
}

Subset subset_from_indices(const std::vector<int>& indices, int k) {
    Subset s = 0;
    for (int i : indices) {
        if (i < 1 || i > k) throw std::invalid_argument("subset index out of range 1.." + std::to_string(k));
        s |= Subset{1} << (i - 1);
    }
    return s;
}

namespace {

void require_k(int k) {
    if (k < 1 || k > max_antichain_k)
        throw std::invalid_argument("antichain k must be in 1.." + std::to_string(max_antichain_k));
}

Subset full_set(int k) { return k >= 32 ? ~Subset{0} : ((Subset{1} << k) - 1); }

void require_same_k(const IdealAntichain& a, const IdealAntichain& b) {
    if (a.k() != b.k()) throw std::invalid_argument("antichains over different k");
}

std::vector<Subset> minimal_elements(std::vector<Subset> v) {
    std::sort(v.begin(), v.end(), [](Subset a, Subset b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<Subset> keep;
    for (Subset s : v) {
        const bool absorbed = std::any_of(keep.begin(), keep.end(), [s](Subset t) { return (t & s) == t; });
        if (!absorbed) keep.push_back(s);
    }
    std::sort(keep.begin(), keep.end(), [](Subset a, Subset b) { return subset_indices(a) < subset_indices(b); });
    return keep;
}

IdealAntichain as_intersection(const IdealAntichain& a) {
    return a.form() == AntichainForm::intersection ? a : to_intersection_form(a);
}

}  // namespace

IdealAntichain::IdealAntichain(int k, std::vector<Subset> members, AntichainForm form)
    : k_(k), form_(form) {
    require_k(k);
    for (Subset s : members)
        if (s & ~full_set(k)) throw std::invalid_argument("subset outside {1.." + std::to_string(k) + "}");
    members_ = minimal_elements(std::move(members));
}

bool IdealAntichain::is_whole_algebra() const {
    return form_ == AntichainForm::intersection ? members_.empty()
                                                : (members_.size() == 1 && members_[0] == 0);
}

bool IdealAntichain::is_zero() const {
    return form_ == AntichainForm::intersection ? (members_.size() == 1 && members_[0] == 0)
                                                : members_.empty();
}

std::string IdealAntichain::to_string() const {
    nlohmann::json j = nlohmann::json::array();
    for (Subset s : members_) j.push_back(subset_indices(s));
    return j.dump();
}

IdealAntichain antichain_normalize(const std::vector<Subset>& subsets, int k, AntichainForm form) {
    return IdealAntichain(k, subsets, form);
}

std::vector<Subset> minimal_transversals(const std::vector<Subset>& family, int k) {
    require_k(k);
    std::vector<Subset> hits;
    const Subset top = full_set(k);
    for (Subset s = 0;; ++s) {
        const bool meets_all = std::all_of(family.begin(), family.end(), [s](Subset f) { return (s & f) != 0; });
        if (meets_all) hits.push_back(s);
        if (s == top) break;
    }
    return minimal_elements(std::move(hits));
}

IdealAntichain to_sum_form(const IdealAntichain& a) {
    if (a.form() == AntichainForm::sum) return a;
    return IdealAntichain(a.k(), minimal_transversals(a.members(), a.k()), AntichainForm::sum);
}

IdealAntichain to_intersection_form(const IdealAntichain& a) {
    if (a.form() == AntichainForm::intersection) return a;
    return IdealAntichain(a.k(), minimal_transversals(a.members(), a.k()), AntichainForm::intersection);
}

IdealAntichain intersect(const IdealAntichain& a, const IdealAntichain& b) {
    require_same_k(a, b);
    const auto x = as_intersection(a), y = as_intersection(b);
    std::vector<Subset> all = x.members();
    all.insert(all.end(), y.members().begin(), y.members().end());
    return IdealAntichain(a.k(), std::move(all));
}

IdealAntichain sum(const IdealAntichain& a, const IdealAntichain& b) {
    require_same_k(a, b);
    const auto x = as_intersection(a), y = as_intersection(b);
    std::vector<Subset> joins;
    for (Subset s : x.members())
        for (Subset t : y.members()) joins.push_back(s | t);
    return IdealAntichain(a.k(), std::move(joins));
}

IdealAntichain product(const IdealAntichain& a, const IdealAntichain& b) { return intersect(a, b); }

bool contains(const IdealAntichain& outer, const IdealAntichain& inner) {
    require_same_k(outer, inner);
    const auto o = as_intersection(outer), i = as_intersection(inner);
    return std::all_of(o.members().begin(), o.members().end(), [&](Subset big) {
        return std::any_of(i.members().begin(), i.members().end(), [big](Subset s) { return (s & big) == s; });
    });
}

namespace {

// Up-closed families of subsets of {1..k} as bitsets indexed by subset mask;
// k <= 5 keeps a family inside 32 bits.
std::vector<std::uint64_t> up_closed_families(int k) {
    if (k == 0) return {0u, 1u};
    const auto lower = up_closed_families(k - 1);
    const int shift = 1 << (k - 1);
    std::vector<std::uint64_t> out;
    for (std::uint64_t without : lower)
        for (std::uint64_t with : lower)
            if ((without & ~with) == 0) out.push_back(without | (with << shift));
    return out;
}

void require_count_k(int k) {
    if (k < 1 || k > max_count_k)
        throw std::invalid_argument("ideal enumeration supports k in 1.." + std::to_string(max_count_k));
}

}  // namespace

std::vector<IdealAntichain> enumerate_ideals(int k) {
    require_count_k(k);
    std::vector<IdealAntichain> out;
    for (std::uint64_t fam : up_closed_families(k)) {
        std::vector<Subset> members;
        for (Subset s = 0; s < (Subset{1} << k); ++s)
            if (fam >> s & 1u) members.push_back(s);
        out.emplace_back(k, std::move(members));
    }
    return out;
}

long long count_ideals(int k) {
    require_count_k(k);
    return static_cast<long long>(up_closed_families(k).size());
}

IdealAntichain parse_antichain(std::string_view text, int k, AntichainForm form) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
        throw ParseError("antichain is not a JSON list of index lists: '" + std::string(text) + "'");
    }
    if (!j.is_array()) throw ParseError("antichain must be a list of index lists");
    std::vector<Subset> members;
    for (const auto& item : j) {
        if (!item.is_array()) throw ParseError("antichain members must be index lists");
        std::vector<int> idx;
        for (const auto& v : item) {
            if (!v.is_number_integer()) throw ParseError("antichain indices must be integers");
            idx.push_back(v.get<int>());
        }
        try {
            members.push_back(subset_from_indices(idx, k));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    return IdealAntichain(k, std::move(members), form);
}

}  // namespace gieseker
