#include "gieseker/diagnostics.hpp"

#include <algorithm>
#include <stdexcept>

#include "gieseker/errors.hpp"

namespace gieseker {

namespace {

void require_nr(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("need n >= 1 and r >= 1");
}

// lambda = s/m for some 1 <= m <= n iff the reduced denominator is at most n.
bool has_denominator_at_most(const ParameterValue& lambda, int n) {
    return lambda.denominator(n).has_value();
}

bool det_localization(int n, const ParameterValue& lambda) {
    if (lambda.is_irrational()) return true;
    return !(lambda.is_negative() && has_denominator_at_most(lambda, n));
}

void compositions_rec(int remaining, int slot, int r, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (slot == r - 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur.push_back(k);
        compositions_rec(remaining - k, slot + 1, r, cur, out);
        cur.pop_back();
    }
}

}  // namespace

bool has_finite_global_dimension(int n, int r, const ParameterValue& lambda) {
    require_nr(n, r);
    if (lambda.is_irrational()) return true;
    // s/m with -rm < s < 0 is the same as -r < lambda < 0.
    const mpq_class& v = lambda.value();
    const bool in_window = v < 0 && v > -r && has_denominator_at_most(lambda, n);
    return !in_window;
}

bool abelian_localization_holds(int n, int r, const ParameterValue& lambda, ThetaSign theta) {
    require_nr(n, r);
    if (theta == ThetaSign::det) return det_localization(n, lambda);
    return det_localization(n, lambda.reflected(r));
}

bool has_finite_dimensional_rep(int n, int r, const ParameterValue& lambda) {
    require_nr(n, r);
    if (lambda.is_irrational()) return false;
    // Reduced denominator exactly n is the same as s/n with gcd(|s|, n) = 1.
    if (lambda.value().get_den() != n) return false;
    return has_finite_global_dimension(n, r, lambda);
}

mpz_class findim_dimension_rank_one(int n, long q) {
    if (n < 1) throw std::invalid_argument("findim_dimension_rank_one: n must be positive");
    if (q < 1) throw std::invalid_argument("findim_dimension_rank_one: q must be positive");
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(q));
    if (g != 1)
        throw HypothesisError("finite-dimensional representation needs q coprime to n",
                              "parameter q/n with gcd(q, n) = 1");
    mpz_class num, qf, nf;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(q + n - 1));
    mpz_fac_ui(qf.get_mpz_t(), static_cast<unsigned long>(q));
    mpz_fac_ui(nf.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class den = qf * nf;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("findim_dimension_rank_one: non-integral quotient");
    return num / den;
}

std::vector<std::vector<int>> compositions(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("compositions: need n >= 0, r >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    compositions_rec(n, 0, r, cur, out);
    return out;
}

std::vector<CartanSummand> cartan_decomposition(int n, int r, const ParameterValue& lambda) {
    require_nr(n, r);
    std::vector<CartanSummand> out;
    for (auto& comp : compositions(n, r)) {
        CartanSummand summand;
        for (int i = 0; i < r; ++i) {
            const int ni = comp[static_cast<std::size_t>(i)];
            if (ni == 0) continue;
            CartanFactor f;
            f.size = ni;
            f.slot = i + 1;
            f.parameter = lambda.shifted(i);
            f.denominator_within_size = f.parameter.denominator(ni).has_value();
            f.has_findim_rep = has_finite_dimensional_rep(ni, 1, f.parameter);
            summand.factors.push_back(std::move(f));
        }
        summand.composition = std::move(comp);
        out.push_back(std::move(summand));
    }
    return out;
}

std::vector<mpq_class> singular_set(int n, int r) {
    require_nr(n, r);
    std::vector<mpq_class> out;
    for (int m = 1; m <= n; ++m)
        for (long s = -static_cast<long>(r) * m + 1; s < 0; ++s) {
            mpq_class q(s, m);
            q.canonicalize();
            out.push_back(q);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DiagnosticsReport diagnose(int n, int r, const ParameterValue& lambda) {
    DiagnosticsReport rep;
    rep.n = n;
    rep.r = r;
    rep.lambda = lambda;
    rep.finite_global_dim = has_finite_global_dimension(n, r, lambda);
    rep.abelian_localization_det = abelian_localization_holds(n, r, lambda, ThetaSign::det);
    rep.abelian_localization_det_inv = abelian_localization_holds(n, r, lambda, ThetaSign::det_inverse);
    rep.has_findim_rep = has_finite_dimensional_rep(n, r, lambda);
    rep.findim_category = rep.has_findim_rep ? FindimCategory::single_simple : FindimCategory::none;
    if (rep.finite_global_dim) {
        const auto m = lambda.denominator(n);
        rep.ideal_count = m ? n / static_cast<int>(*m) : 0;
    }
    return rep;
}

}  // namespace gieseker
