#include <doctest.h>

#include <functional>
#include <set>

#include "gieseker/category_o.hpp"
#include "gieseker/errors.hpp"
#include "gieseker/ideal_lattice.hpp"

using namespace gieseker;

namespace {

ParameterValue Q(long p, long q = 1) { return ParameterValue::rational(p, q); }
Multipartition M(const char* text) { return parse_multipartition(text); }

// Every value the box-removal recursion can produce, over all corner choices.
std::set<int> recursion_values(int n, int r, int m, const Multipartition& sigma) {
    if (n < m) return {r * n};
    const auto corners = legal_remainder_corners(sigma, m);
    if (corners.empty()) {
        int dim = 0;
        for (int i = 0; i < r; ++i) dim += sigma[static_cast<std::size_t>(i)].size() / m * (i == 0 ? 1 : r * m);
        return {dim};
    }
    std::set<int> out;
    for (const auto& c : corners)
        for (int v : recursion_values(n - 1, r, m, remove_box(sigma, c))) out.insert(r + v);
    return out;
}

// Direct evaluation of sum over multipartitions of t^{exponent}.
std::vector<long long> poincare_oracle(int n, int r) {
    std::vector<long long> c;
    for (const auto& mp : enumerate_multipartitions(n, r)) {
        int e = 0;
        for (int i = 0; i < r; ++i) {
            const auto& p = mp[static_cast<std::size_t>(i)];
            e += r * p.size() - (i + 1) * static_cast<int>(p.length());
        }
        REQUIRE(e >= 0);
        if (c.size() <= static_cast<std::size_t>(e)) c.resize(static_cast<std::size_t>(e) + 1, 0);
        ++c[static_cast<std::size_t>(e)];
    }
    return c;
}

}  // namespace

TEST_CASE("poincare polynomial examples") {
    CHECK(poincare_polynomial(2, 1).to_string() == "1 + t");
    CHECK(poincare_polynomial(1, 2).to_string() == "1 + t");
    CHECK(poincare_polynomial(2, 2).to_string() == "1 + t + 2t^2 + t^3");
    CHECK(poincare_polynomial(2, 2).coefficients == std::vector<long long>{1, 1, 2, 1});
    CHECK(poincare_polynomial(0, 3).to_string() == "1");
    CHECK(betti_exponent(M("2|-")) == 3);
}

TEST_CASE("poincare invariants") {
    for (int n = 1; n <= 7; ++n)
        for (int r = 1; r <= 3; ++r) {
            const auto p = poincare_polynomial(n, r);
            CHECK(p.coefficients == poincare_oracle(n, r));
            CHECK(p.at(0) == 1);
            CHECK(p.value_at_one() == static_cast<long long>(enumerate_multipartitions(n, r).size()));
            CHECK(p.degree() == r * n - 1);
            CHECK(p.at(p.degree()) == 1);
            const auto top = top_cohomology_check(n, r);
            CHECK(top.ok);
            REQUIRE(top.maximizers.size() == 1);
            CHECK(top.maximizers[0][0] == Partition({n}));
        }
    const auto t = top_cohomology_check(2, 2);
    CHECK(t.maximizers[0].to_string() == "2|-");
    CHECK(top_cohomology_check(1, 1).degree == 0);
}

TEST_CASE("semisimplicity examples") {
    CHECK(semisimplicity(3, 2, Q(1, 5)) == Semisimplicity::semisimple);
    CHECK(semisimplicity(3, 2, Q(1, 3)) == Semisimplicity::not_semisimple);
    CHECK(semisimplicity(4, 1, Q(1, 2)) == Semisimplicity::not_semisimple);
    CHECK(semisimplicity(3, 2, ParameterValue::irrational()) == Semisimplicity::semisimple);
    CHECK(to_string(Semisimplicity::unknown) == "unknown");
}

TEST_CASE("support examples") {
    auto s = support_dimension(2, 1, Q(1, 2), M("2"));
    CHECK(s.support_dim == 1);
    CHECK(s.quotient == Partition({1}));
    CHECK(support_dimension(2, 1, Q(1, 2), M("1,1")).support_dim == 2);
    s = support_dimension(3, 2, Q(1, 2), M("2|1"));
    CHECK(s.support_dim == 3);
    CHECK(s.annihilator_index == 1);
    s = support_dimension(4, 1, Q(1, 2), M("4"));
    CHECK(s.support_dim == 2);
    CHECK(s.annihilator_index == 2);
    CHECK(annihilator_index(4, 1, Q(1, 2), M("4")) == 2);
    CHECK(annihilator_index(4, 1, Q(1, 2), M("1,1,1,1")) == 0);
    CHECK(annihilator_index(3, 2, Q(1, 2), M("2|1")) == 1);
    s = support_dimension(3, 2, ParameterValue::irrational(), M("3|-"));
    CHECK(s.support_dim == 6);
    CHECK_FALSE(s.m.has_value());

    CHECK_THROWS_AS(support_dimension(2, 1, Q(-1, 2), M("2")), HypothesisError);
    CHECK_THROWS_AS(support_dimension(2, 1, Q(1), M("2")), HypothesisError);
    CHECK_THROWS_AS(support_dimension(2, 1, Q(0), M("2")), HypothesisError);
    CHECK_THROWS(support_dimension(2, 1, Q(1, 2), M("3")));
    CHECK_THROWS(support_dimension(2, 2, Q(1, 2), M("2")));
}

TEST_CASE("recursion examples") {
    CHECK(support_dimension_recursive(2, 1, 2, M("2")) == 1);
    CHECK(support_dimension_recursive(2, 2, 2, M("-|2")) == 4);
    CHECK(support_dimension_recursive(3, 1, 2, M("2,1")) == 3);
    CHECK_THROWS(support_dimension_recursive(2, 1, 1, M("2")));
}

TEST_CASE("closed formula agrees with the recursion over all corner choices") {
    for (int n = 1; n <= 8; ++n)
        for (int r = 1; r <= 3; ++r) {
            if (r == 3 && n > 7) continue;
            for (int m = 2; m <= 3; ++m) {
                const auto lambda = Q(1, m);
                for (const auto& sigma : enumerate_multipartitions(n, r)) {
                    const auto rep = support_dimension(n, r, lambda, sigma);
                    CHECK(rep.support_dim == support_dimension_recursive(n, r, m, sigma));
                    const auto all = recursion_values(n, r, m, sigma);
                    REQUIRE(all.size() == 1);
                    CHECK(*all.begin() == rep.support_dim);
                    CHECK(2 * rep.support_dim == 2 * r * n - rep.quotient_size * (2 * r * m - 2));
                    CHECK(rep.annihilator_index == rep.quotient_size);
                    CHECK(rep.annihilator_index <= n / m);
                }
            }
        }
}

TEST_CASE("recursion on a large rank-three sweep") {
    for (int m = 2; m <= 3; ++m)
        for (const auto& sigma : enumerate_multipartitions(8, 3))
            CHECK(support_dimension(8, 3, Q(1, m), sigma).support_dim == support_dimension_recursive(8, 3, m, sigma));
}

TEST_CASE("holonomicity against ideal variety dimensions") {
    for (int n = 1; n <= 8; ++n)
        for (int r = 2; r <= 3; ++r)
            for (int m = 2; m <= n; ++m) {
                const auto chain = ideal_chain(n, r, Q(1, m));
                for (const auto& sigma : enumerate_multipartitions(n, r)) {
                    const auto rep = support_dimension(n, r, Q(1, m), sigma);
                    int variety = reduced_variety_dimension(n, r) + 2;
                    if (rep.annihilator_index > 0)
                        variety = *chain.entries[static_cast<std::size_t>(rep.annihilator_index - 1)].variety_dim + 2;
                    CHECK(2 * rep.support_dim == variety);
                }
            }
}

TEST_CASE("finite-dimensional label has the unique minimal support") {
    for (int n = 2; n <= 7; ++n)
        for (int r = 1; r <= 3; ++r) {
            const auto lambda = Q(1, n);
            int minimum = r * n + 1, attained = 0;
            Multipartition arg;
            for (const auto& sigma : enumerate_multipartitions(n, r)) {
                const int d = support_dimension(n, r, lambda, sigma).support_dim;
                if (d < minimum) {
                    minimum = d;
                    attained = 0;
                    arg = sigma;
                }
                if (d == minimum) ++attained;
            }
            CHECK(minimum == 1);
            CHECK(attained == 1);
            CHECK(arg[0] == Partition({n}));
        }
}

TEST_CASE("block structure") {
    auto b = block_structure(2, 1, Q(1, 2), dominant_cocharacter(2, 1));
    CHECK(b.kind == BlockStructure::Kind::hooks_block);
    REQUIRE(b.hooks.size() == 2);
    CHECK(b.hooks[0].name() == "h_{1,2}");
    CHECK(b.hooks[1].name() == "h_{1,1}");
    REQUIRE(b.finite_dim_label.has_value());
    CHECK(b.finite_dim_label->to_string() == "2");

    b = block_structure(3, 2, Q(1, 3), dominant_cocharacter(3, 2));
    std::vector<std::string> names;
    for (const auto& h : b.hooks) names.push_back(h.name());
    CHECK(names == std::vector<std::string>{"h_{1,3}", "h_{1,2}", "h_{1,1}", "h_{2,3}", "h_{2,2}", "h_{2,1}"});
    CHECK(b.ordered);

    CHECK(block_structure(3, 2, Q(1, 5), dominant_cocharacter(3, 2)).kind == BlockStructure::Kind::semisimple);
    CHECK(block_structure(3, 2, ParameterValue::irrational(), dominant_cocharacter(3, 2)).kind ==
          BlockStructure::Kind::semisimple);
    CHECK(block_structure(4, 2, Q(1, 2), dominant_cocharacter(4, 2)).kind == BlockStructure::Kind::partial_unknown);
    CHECK_THROWS_AS(block_structure(1, 2, Q(1), dominant_cocharacter(1, 2)), HypothesisError);
    CHECK_THROWS_AS(block_structure(2, 2, Q(1, 2), Cocharacter{{1, 0}, 1}), NonGenericError);

    const Cocharacter antidominant{{0, 3}, 1};
    b = block_structure(2, 2, Q(1, 2), antidominant);
    CHECK(b.kind == BlockStructure::Kind::hooks_block);
    CHECK_FALSE(b.ordered);
    CHECK_FALSE(b.finite_dim_label.has_value());
    CHECK(b.finite_dim_candidates.size() == 4);

    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 3; ++r) {
            if (n == 1) continue;
            const auto blk = block_structure(n, r, Q(1, n), dominant_cocharacter(n, r));
            CHECK(blk.labels.size() == static_cast<std::size_t>(r * n));
            std::set<Multipartition> hooks_set(blk.labels.begin(), blk.labels.end());
            std::set<Multipartition> oracle;
            for (const auto& mp : enumerate_multipartitions(n, r)) {
                int nonempty = 0;
                bool hook_shape = true;
                for (const auto& c : mp.components()) {
                    if (c.empty()) continue;
                    ++nonempty;
                    for (std::size_t i = 1; i < c.length(); ++i) hook_shape = hook_shape && c.part(i) == 1;
                }
                if (nonempty == 1 && hook_shape) oracle.insert(mp);
            }
            CHECK(hooks_set == oracle);
        }
}
