#include <doctest.h>

#include "gieseker/quiver_engine.hpp"

using namespace gieseker;

namespace {

int total(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

}  // namespace

TEST_CASE("model algebra dimensions and basis") {
    auto A = build_model_algebra(2);
    CHECK(A.dimension() == 5);
    std::vector<std::string> labels;
    for (const auto& b : A.basis()) labels.push_back(b.label);
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<std::string>{"a_{12}", "a_{21}", "a_{22}", "e_1", "e_2"});
    CHECK(build_model_algebra(1).dimension() == 1);
    CHECK(build_model_algebra(4).dimension() == 13);
    CHECK_THROWS(build_model_algebra(0));
    for (int N = 1; N <= 12; ++N) {
        const auto B = build_model_algebra(N);
        CHECK(B.dimension() == static_cast<std::size_t>(4 * N - 3));
        CHECK(B.verify_associativity());
        CHECK(B.verify_anti_automorphism());
    }
}

TEST_CASE("relations of the model algebra") {
    const auto A = build_model_algebra(4);
    const auto a12 = *A.find(1, 2), a21 = *A.find(2, 1);
    CHECK_FALSE(A.product(a12, a21).has_value());
    CHECK(A.product(a21, a12) == A.find(2, 2));
    for (int i = 2; i <= 3; ++i) {
        const auto up = A.product(*A.find(i, i + 1), *A.find(i + 1, i));
        const auto down = A.product(*A.find(i, i - 1), *A.find(i - 1, i));
        REQUIRE(up.has_value());
        CHECK(up == down);
        CHECK(up == A.find(i, i));
    }
    CHECK_FALSE(A.product(*A.find(1, 2), *A.find(2, 3)).has_value());
    CHECK_FALSE(A.product(*A.find(3, 3), *A.find(3, 3)).has_value());
    CHECK_FALSE(A.find(1, 3).has_value());
    CHECK_FALSE(A.find(1, 1).has_value());
    CHECK(A.radical().size() == A.dimension() - 4);
}

TEST_CASE("standard modules for N = 2") {
    const auto A = build_model_algebra(2);
    CHECK(projective(A, 1).dim == 2);
    CHECK(projective(A, 2).dim == 3);
    CHECK(standard(A, 1).dim == 2);
    CHECK(standard(A, 2).dim == 1);
    CHECK(simple(A, 1).dim == 1);
    CHECK(simple(A, 2).dim == 1);
    CHECK(costandard(A, 1).dim == 2);
    CHECK(is_isomorphic(A, standard(A, 2), simple(A, 2)));
    CHECK(dimension_vector(A, projective(A, 2)) == std::vector<int>{1, 2});
}

TEST_CASE("module families for several N") {
    for (int N = 1; N <= 6; ++N) {
        const auto A = build_model_algebra(N);
        int sum = 0;
        for (int i = 1; i <= N; ++i) {
            const auto P = projective(A, i);
            CHECK(is_module(A, P));
            CHECK(is_module(A, standard(A, i)));
            CHECK(is_module(A, costandard(A, i)));
            CHECK(is_module(A, simple(A, i)));
            sum += static_cast<int>(P.dim);
            CHECK(total(dimension_vector(A, P)) == static_cast<int>(P.dim));
            CHECK(is_isomorphic(A, twisted_dual(A, twisted_dual(A, P)), P));
            CHECK(is_isomorphic(A, twisted_dual(A, simple(A, i)), simple(A, i)));
        }
        CHECK(sum == static_cast<int>(A.dimension()));
        CHECK(is_isomorphic(A, standard(A, 1), projective(A, 1)));
        CHECK(standard(A, N).dim == 1);
        CHECK(tiltings(A).size() == static_cast<std::size_t>(N));
        if (N >= 2) {
            // The projective Delta_1 is not tilting: it differs from the costandard.
            CHECK_FALSE(is_isomorphic(A, standard(A, 1), costandard(A, 1)));
            CHECK(embeds(A, standard(A, 1), projective(A, 2)));
        }
    }
}

TEST_CASE("ext examples") {
    const auto A = build_model_algebra(2);
    const auto e = ext_groups(A, standard(A, 2), simple(A, 1), 4);
    CHECK(e.dims == std::vector<int>{0, 1, 0, 0, 0});
    for (int N = 2; N <= 5; ++N) {
        const auto B = build_model_algebra(N);
        for (int i = 1; i <= N; ++i) {
            const auto res = minimal_resolution(B, simple(B, i), 3);
            for (int j = 1; j <= N; ++j) {
                const auto g = ext_groups(B, res, simple(B, j), 2);
                CHECK(g.dims[0] == (i == j ? 1 : 0));
                CHECK(g.dims[1] == (std::abs(i - j) == 1 ? 1 : 0));
                CHECK(ext_to_simple_by_multiplicity(res, j, 2).dims == g.dims);
            }
        }
    }
    // Projectives have no higher Ext.
    const auto B = build_model_algebra(3);
    const auto res = minimal_resolution(B, projective(B, 2), 3);
    CHECK(res.complete);
    CHECK(res.terms.size() == 1);
    CHECK(ext_groups(B, projective(B, 2), simple(B, 1), 3).dims == std::vector<int>{0, 0, 0, 0});
    const auto trunc = ext_groups(B, simple(B, 2), simple(B, 2), 1);
    CHECK(trunc.dims.size() == 2);
}

TEST_CASE("resolution of Delta_N gives concentration in degree N - 1") {
    for (int N = 2; N <= 6; ++N) {
        const auto A = build_model_algebra(N);
        const auto e = ext_groups(A, standard(A, N), simple(A, 1), N + 1);
        for (int k = 0; k <= N + 1; ++k) CHECK(e.dims[static_cast<std::size_t>(k)] == (k == N - 1 ? 1 : 0));
    }
}

TEST_CASE("model properties") {
    for (int N = 1; N <= 5; ++N) {
        const auto rep = verify_model_properties(N);
        for (const auto& c : rep.checks) {
            INFO(N << " " << c.name << ": " << c.detail);
            CHECK(c.passed);
        }
        CHECK(rep.all_passed());
        if (N >= 2) {
            REQUIRE(rep.concentration_degree.has_value());
            CHECK(*rep.concentration_degree == N - 1);
            CHECK_FALSE(rep.degree_matches_literal_n);
        }
    }
    CHECK(verify_model_properties(2).find("(v) unique_higher_summand") != nullptr);
    CHECK(verify_model_properties(2).find("missing") == nullptr);
}

TEST_CASE("k0 classes") {
    const auto k2 = k0_class_check(build_model_algebra(2));
    CHECK(k2.passed);
    CHECK(k2.cartan == std::vector<std::vector<int>>{{1, 1}, {1, 2}});
    CHECK(k2.decomposition == std::vector<std::vector<int>>{{1, 1}, {0, 1}});
    CHECK(k2.cartan_equals_dtd);
    CHECK(k2.standard_costandard_classes_agree);
    CHECK(k0_class_check(build_model_algebra(3)).passed);
    CHECK(k0_class_check(build_model_algebra(1)).passed);
}

TEST_CASE("module json") {
    const auto A = build_model_algebra(2);
    const auto j = module_to_json(A, projective(A, 2));
    CHECK(j["dimension"] == 3);
    CHECK(j["dimension_vector"] == nlohmann::json::array({1, 2}));
    CHECK(j["actions"].contains("a_{21}"));
    CHECK(j["actions"]["e_2"].size() == 3);
    const auto r = report_to_json(verify_model_properties(2));
    CHECK(r["all_passed"] == true);
    CHECK(r["concentration_degree"] == 1);
}
