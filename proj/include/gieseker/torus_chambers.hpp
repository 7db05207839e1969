#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gieseker {

/// One-parameter subgroup t -> (diag(t^{d_1}, ..., t^{d_r}), t^k).
struct Cocharacter {
    std::vector<long> d;
    long k = 0;

    int rank() const noexcept { return static_cast<int>(d.size()); }
    bool is_zero() const noexcept;
    /// "d1,...,dr;k"
    std::string to_string() const;

    friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
};

/// "d1,d2,...,dr;k"
Cocharacter parse_cocharacter(std::string_view text);

/// Either k = 0 or d_i - d_j - s k = 0 (i < j, |s| < n).
struct Wall {
    enum class Kind { k_zero, difference } kind = Kind::k_zero;
    int i = 0;  // 1-based, difference walls only
    int j = 0;
    long s = 0;

    /// Value of the linear form on a cocharacter.
    long evaluate(const Cocharacter& nu) const;
    std::string to_string() const;

    friend bool operator==(const Wall&, const Wall&) = default;
};

struct WallSet {
    int n = 0;
    int r = 0;
    std::vector<Wall> walls;  // k = 0 first, then (i, j) lexicographic, s ascending
};

/// 1 + r(r-1)/2 * (2n-1) walls; distinct (i, j, s) give distinct linear forms,
/// so nothing is deduplicated.
WallSet walls(int n, int r);

/// First wall containing nu, if any.
std::optional<Wall> violated_wall(const Cocharacter& nu, int n);

/// Throws std::invalid_argument for the zero cocharacter.
bool is_generic(const Cocharacter& nu, int n);

/// k >= 1 and d_i - d_{i+1} > n k for every i.
bool is_dominant(const Cocharacter& nu, int n);

/// Standard dominant representative ((r-1)(n+1), ..., n+1, 0; 1).
Cocharacter dominant_cocharacter(int n, int r);

/// Sign vectors on all walls agree. Both inputs must be generic; a
/// non-generic input throws NonGenericError naming the wall.
bool same_chamber(const Cocharacter& a, const Cocharacter& b, int n);

class NonGenericError : public std::invalid_argument {
public:
    NonGenericError(const Cocharacter& nu, const Wall& wall);
    const Wall& wall() const noexcept { return wall_; }

private:
    Wall wall_;
};

struct FixedComponent {
    std::vector<int> composition;  // (n_1, ..., n_r)
    int dimension = 0;             // 2 sum n_i
    long long fixed_points = 0;    // prod p(n_i)
};

/// Components of the fixed locus of nu0 with k = 0 and pairwise distinct d_i:
/// one product of Hilbert schemes per composition of n.
std::vector<FixedComponent> fixed_components_k0(const Cocharacter& nu0, int n);

}  // namespace gieseker
