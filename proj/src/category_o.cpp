#include "gieseker/category_o.hpp"

#include <stdexcept>

#include "gieseker/diagnostics.hpp"
#include "gieseker/errors.hpp"

namespace gieseker {

long long Polynomial::at(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coefficients.size()) ? coefficients[static_cast<std::size_t>(i)] : 0;
}

long long Polynomial::value_at_one() const noexcept {
    long long s = 0;
    for (auto c : coefficients) s += c;
    return s;
}

std::string Polynomial::to_string() const {
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
        const long long c = at(i);
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        const long long a = c < 0 ? -c : c;
        if (i == 0) {
            out += std::to_string(a);
            continue;
        }
        if (a != 1) out += std::to_string(a);
        out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

int betti_exponent(const Multipartition& lambda) {
    const int r = lambda.rank();
    int e = 0;
    for (int i = 1; i <= r; ++i) {
        const auto& c = lambda[static_cast<std::size_t>(i - 1)];
        // first column of the transpose = number of rows
        e += r * c.size() - i * static_cast<int>(c.length());
    }
    return e;
}

Polynomial poincare_polynomial(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("poincare_polynomial: need n >= 0, r >= 1");
    Polynomial p;
    for (const auto& mp : enumerate_multipartitions(n, r)) {
        const int e = betti_exponent(mp);
        if (e >= static_cast<int>(p.coefficients.size())) p.coefficients.resize(static_cast<std::size_t>(e) + 1, 0);
        ++p.coefficients[static_cast<std::size_t>(e)];
    }
    return p;
}

namespace {

Multipartition row_in_first_slot(int n, int r) {
    std::vector<Partition> comps(static_cast<std::size_t>(r));
    if (n > 0) comps[0] = Partition({n});
    return Multipartition(std::move(comps));
}

Multipartition single_slot(int slot, Partition p, int r) {
    std::vector<Partition> comps(static_cast<std::size_t>(r));
    comps[static_cast<std::size_t>(slot)] = std::move(p);
    return Multipartition(std::move(comps));
}

[[noreturn]] void reject_integral() {
    throw HypothesisError("denominator m > 1 required; integral parameters are not covered",
                          "support formula hypothesis m > 1");
}

void check_sigma(int n, int r, const Multipartition& sigma) {
    if (sigma.rank() != r)
        throw std::invalid_argument("multipartition has " + std::to_string(sigma.rank()) +
                                    " components, expected r = " + std::to_string(r));
    if (sigma.size() != n)
        throw std::invalid_argument("multipartition has size " + std::to_string(sigma.size()) +
                                    ", expected n = " + std::to_string(n));
}

}  // namespace

TopCohomology top_cohomology_check(int n, int r) {
    TopCohomology t;
    const auto p = poincare_polynomial(n, r);
    t.degree = p.degree();
    t.leading_coefficient = p.at(p.degree());
    for (const auto& mp : enumerate_multipartitions(n, r))
        if (betti_exponent(mp) == t.degree) t.maximizers.push_back(mp);
    t.ok = t.degree == r * n - 1 && t.leading_coefficient == 1 && t.maximizers.size() == 1 &&
           t.maximizers.front() == row_in_first_slot(n, r);
    return t;
}

std::string to_string(Semisimplicity s) {
    switch (s) {
        case Semisimplicity::semisimple: return "semisimple";
        case Semisimplicity::not_semisimple: return "not_semisimple";
        case Semisimplicity::unknown: break;
    }
    return "unknown";
}

Semisimplicity semisimplicity(int n, int r, const ParameterValue& lambda) {
    if (n < 1 || r < 1) throw std::invalid_argument("semisimplicity: need n, r >= 1");
    const auto m = lambda.denominator(n);
    if (!m) return Semisimplicity::semisimple;
    if (*m == n) return Semisimplicity::not_semisimple;
    if (*m == 1 || !lambda.is_positive()) return Semisimplicity::unknown;
    // 1 < m < n, lambda > 0: the label with first slot (n) has quotient of size
    // floor(n/m) >= 1, hence support below rn.
    const auto rep = support_dimension(n, r, lambda, row_in_first_slot(n, r));
    return rep.support_dim < r * n ? Semisimplicity::not_semisimple : Semisimplicity::unknown;
}

SupportReport support_dimension(int n, int r, const ParameterValue& lambda, const Multipartition& sigma) {
    if (n < 1 || r < 1) throw std::invalid_argument("support_dimension: need n, r >= 1");
    check_sigma(n, r, sigma);
    SupportReport rep;
    rep.sigma = sigma;
    if (lambda.is_rational()) {
        const mpz_class& den = lambda.value().get_den();
        if (den == 1) reject_integral();
        if (!lambda.is_positive())
            throw HypothesisError(
                "lambda > 0 required; lambda and -lambda-r give isomorphic algebras, but that "
                "normalization is not applied here",
                "support formula hypothesis lambda > 0");
        if (den.fits_slong_p()) rep.m = den.get_si();
    }
    const auto m_small = lambda.denominator(n);
    if (m_small) {
        const auto div = divide_with_remainder(sigma[0], static_cast<int>(*m_small));
        rep.quotient = div.quotient;
    }
    rep.quotient_size = rep.quotient.size();
    const int m = m_small ? static_cast<int>(*m_small) : 0;
    rep.support_dim = r * n - rep.quotient_size * (r * m - 1);
    rep.annihilator_index = rep.quotient_size;
    return rep;
}

std::vector<Corner> legal_remainder_corners(const Multipartition& sigma, int m) {
    if (m < 2) throw std::invalid_argument("legal_remainder_corners: m must be at least 2");
    std::vector<Corner> out;
    for (int c = 0; c < sigma.rank(); ++c) {
        const auto& part = sigma[static_cast<std::size_t>(c)];
        const auto q = divide_with_remainder(part, m).quotient;
        for (int row = 0; row < static_cast<int>(part.length()); ++row) {
            const auto j = static_cast<std::size_t>(row);
            if (part.part(j) <= part.part(j + 1)) continue;
            auto parts = part.parts();
            --parts[j];
            if (divide_with_remainder(Partition(std::move(parts)), m).quotient == q) out.push_back({c, row});
        }
    }
    return out;
}

Multipartition remove_box(const Multipartition& sigma, const Corner& c) {
    auto comps = sigma.components();
    auto parts = comps.at(static_cast<std::size_t>(c.component)).parts();
    --parts.at(static_cast<std::size_t>(c.row));
    comps[static_cast<std::size_t>(c.component)] = Partition(std::move(parts));
    return Multipartition(std::move(comps));
}

int support_dimension_recursive(int n, int r, int m, const Multipartition& sigma) {
    if (m < 2) throw std::invalid_argument("support_dimension_recursive: m must be at least 2");
    check_sigma(n, r, sigma);
    if (n < m) return r * n;
    const auto corners = legal_remainder_corners(sigma, m);
    if (corners.empty()) {
        // Every component is m times a partition.
        int dim = 0;
        for (int i = 0; i < r; ++i) {
            const auto& c = sigma[static_cast<std::size_t>(i)];
            if (!divide_with_remainder(c, m).remainder.empty())
                throw std::logic_error("nonempty remainder without a removable box");
            dim += (c.size() / m) * (i == 0 ? 1 : r * m);
        }
        return dim;
    }
    return r + support_dimension_recursive(n - 1, r, m, remove_box(sigma, corners.front()));
}

int annihilator_index(int n, int r, const ParameterValue& lambda, const Multipartition& sigma) {
    if (!has_finite_global_dimension(n, r, lambda))
        throw HypothesisError("finite global dimension required for a nonzero ideal chain",
                              "ideal chain hypothesis: finite homological dimension");
    return support_dimension(n, r, lambda, sigma).annihilator_index;
}

std::string to_string(BlockStructure::Kind k) {
    switch (k) {
        case BlockStructure::Kind::semisimple: return "semisimple";
        case BlockStructure::Kind::hooks_block: return "hooks_block";
        case BlockStructure::Kind::partial_unknown: break;
    }
    return "partial_unknown";
}

BlockStructure block_structure(int n, int r, const ParameterValue& lambda, const Cocharacter& nu) {
    if (n < 1 || r < 1) throw std::invalid_argument("block_structure: need n, r >= 1");
    if (nu.rank() != r)
        throw std::invalid_argument("cocharacter has rank " + std::to_string(nu.rank()) + ", expected r = " +
                                    std::to_string(r));
    if (nu.is_zero()) throw std::invalid_argument("genericity is undefined for the zero cocharacter");
    if (auto w = violated_wall(nu, n)) throw NonGenericError(nu, *w);

    BlockStructure b;
    if (lambda.is_rational() && lambda.value().get_den() == 1) reject_integral();
    const auto m = lambda.denominator(n);
    if (!m) return b;
    if (*m < n) {
        b.kind = BlockStructure::Kind::partial_unknown;
        return b;
    }
    b.kind = BlockStructure::Kind::hooks_block;
    b.hooks = hooks(n, r);
    for (const auto& h : b.hooks) b.labels.push_back(h.realize(n, r));
    b.ordered = is_dominant(nu, n);
    if (b.ordered) {
        b.finite_dim_label = row_in_first_slot(n, r);
        b.finite_dim_candidates.push_back(*b.finite_dim_label);
    } else {
        for (int i = 0; i < r; ++i) {
            b.finite_dim_candidates.push_back(single_slot(i, Partition({n}), r));
            b.finite_dim_candidates.push_back(single_slot(i, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), r));
        }
    }
    return b;
}

}  // namespace gieseker
