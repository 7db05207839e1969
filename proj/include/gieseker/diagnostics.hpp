#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "gieseker/parameter.hpp"

namespace gieseker {

enum class ThetaSign { det = 1, det_inverse = -1 };

/// Finite global dimension fails exactly on lambda = s/m with 1 <= m <= n and
/// -rm < s < 0, quantified over all pairs (m, s), reduced or not.
bool has_finite_global_dimension(int n, int r, const ParameterValue& lambda);

/// For theta = det: fails exactly on lambda = s/m with 1 <= m <= n and s < 0.
/// For theta = det^{-1} the det test is applied to -lambda - r.
bool abelian_localization_holds(int n, int r, const ParameterValue& lambda, ThetaSign theta);

/// lambda = s/n with gcd(|s|, n) = 1 and finite global dimension.
bool has_finite_dimensional_rep(int n, int r, const ParameterValue& lambda);

/// (q+n-1)! / (q! n!) for r = 1, lambda = q/n. Requires q >= 1 and gcd(q, n) = 1.
mpz_class findim_dimension_rank_one(int n, long q);

struct CartanFactor {
    int size = 0;                 // n_i > 0
    ParameterValue parameter;     // lambda + i - 1
    int slot = 0;                 // i, 1-based
    bool denominator_within_size = false;  // reduced denominator <= n_i
    bool has_findim_rep = false;           // of the rank-one factor algebra
};

struct CartanSummand {
    std::vector<int> composition;      // (n_1, ..., n_r)
    std::vector<CartanFactor> factors;  // one per nonzero n_i
};

/// One summand per composition of n into r nonnegative parts, compositions in
/// lexicographically descending order.
std::vector<CartanSummand> cartan_decomposition(int n, int r, const ParameterValue& lambda);

/// {s/m : 1 <= m <= n, -rm < s < 0}, deduplicated, ascending.
std::vector<mpq_class> singular_set(int n, int r);

/// Compositions of n into r nonnegative parts, lexicographically descending.
std::vector<std::vector<int>> compositions(int n, int r);

enum class FindimCategory { none, single_simple };

struct DiagnosticsReport {
    int n = 0;
    int r = 0;
    ParameterValue lambda;
    bool finite_global_dim = false;
    bool abelian_localization_det = false;
    bool abelian_localization_det_inv = false;
    bool has_findim_rep = false;
    FindimCategory findim_category = FindimCategory::none;
    /// Number of proper two-sided ideals; nullopt marks the simple algebra of
    /// infinite homological dimension.
    std::optional<int> ideal_count;
};

DiagnosticsReport diagnose(int n, int r, const ParameterValue& lambda);

}  // namespace gieseker
