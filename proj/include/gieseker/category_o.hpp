#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gieseker/parameter.hpp"
#include "gieseker/partitions.hpp"
#include "gieseker/torus_chambers.hpp"

namespace gieseker {

/// Integer polynomial in t, coefficient i at index i, no trailing zeros.
struct Polynomial {
    std::vector<long long> coefficients;

    int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
    long long at(int i) const noexcept;
    long long value_at_one() const noexcept;
    /// "1 + t + 2t^2 + t^3"
    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Exponent sum_i (r|lambda^{(i)}| - i * length(lambda^{(i)})) for one multipartition.
int betti_exponent(const Multipartition& lambda);

/// Generating polynomial of even Betti numbers, one monomial per r-multipartition of n.
Polynomial poincare_polynomial(int n, int r);

struct TopCohomology {
    bool ok = false;
    int degree = 0;
    long long leading_coefficient = 0;
    std::vector<Multipartition> maximizers;
};

/// Degree must be rn - 1 with leading coefficient 1, attained only at ((n), -, ..., -).
TopCohomology top_cohomology_check(int n, int r);

enum class Semisimplicity { semisimple, not_semisimple, unknown };
std::string to_string(Semisimplicity s);

Semisimplicity semisimplicity(int n, int r, const ParameterValue& lambda);

struct SupportReport {
    Multipartition sigma;
    std::optional<long> m;  // reduced denominator; nullopt for irrational lambda
    Partition quotient;     // quotient of sigma^{(1)} on division by m
    int quotient_size = 0;
    int support_dim = 0;
    int annihilator_index = 0;  // 0: zero ideal; i >= 1: J_i
};

/// dim Supp L(sigma) = rn - |sigma^{(1)q}|(rm - 1) for dominant nu, lambda > 0,
/// denominator m > 1. Throws HypothesisError outside that regime.
SupportReport support_dimension(int n, int r, const ParameterValue& lambda, const Multipartition& sigma);

/// Boxes that the recursion may remove: (component, row) pairs, 0-based,
/// such that the remainder is nonempty there and the quotient of that
/// component survives the removal.
struct Corner {
    int component = 0;
    int row = 0;
    friend bool operator==(const Corner&, const Corner&) = default;
};
std::vector<Corner> legal_remainder_corners(const Multipartition& sigma, int m);
Multipartition remove_box(const Multipartition& sigma, const Corner& c);

/// Support dimension computed by induction on n through box removal, without
/// the closed formula. Uses the first legal corner at each step.
int support_dimension_recursive(int n, int r, int m, const Multipartition& sigma);

/// Index of the annihilator in the ideal chain (0 = zero ideal).
int annihilator_index(int n, int r, const ParameterValue& lambda, const Multipartition& sigma);

struct BlockStructure {
    enum class Kind { semisimple, hooks_block, partial_unknown } kind = Kind::semisimple;
    bool ordered = false;                       // hooks carried in the dominant order
    std::vector<Hook> hooks;                    // hooks_block only
    std::vector<Multipartition> labels;         // realized hooks, same order
    std::optional<Multipartition> finite_dim_label;  // decided for dominant nu
    std::vector<Multipartition> finite_dim_candidates;  // (n) or (1^n) in one slot
};
std::string to_string(BlockStructure::Kind k);

BlockStructure block_structure(int n, int r, const ParameterValue& lambda, const Cocharacter& nu);

}  // namespace gieseker
