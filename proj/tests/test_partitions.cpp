#include <doctest.h>

#include <functional>
#include <set>

#include "gieseker/errors.hpp"
#include "gieseker/partitions.hpp"

using namespace gieseker;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Largest |q| over all q with q_i <= floor(l_i / m) componentwise such that
// l - m q is a partition.
int brute_force_quotient_size(const Partition& l, int m, std::vector<std::vector<int>>& maximizers) {
    const std::size_t len = l.length();
    std::vector<int> q(len, 0);
    int best = -1;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == len) {
            for (std::size_t j = 0; j + 1 < len; ++j)
                if (l.part(j) - m * q[j] < l.part(j + 1) - m * q[j + 1]) return;
            for (std::size_t j = 0; j < len; ++j)
                if (l.part(j) - m * q[j] < 0) return;
            int s = 0;
            for (int x : q) s += x;
            if (s > best) {
                best = s;
                maximizers.clear();
            }
            if (s == best) maximizers.push_back(q);
            return;
        }
        const int cap = i == 0 ? l.part(0) / m : std::min(q[i - 1], l.part(i) / m);
        for (int v = 0; v <= cap; ++v) {
            q[i] = v;
            rec(i + 1);
        }
        q[i] = 0;
    };
    rec(0);
    return best;
}

// Coefficients of prod_j (1 - t^j)^{-r} up to t^nmax.
std::vector<long long> multipartition_counts(int nmax, int r) {
    std::vector<long long> c(static_cast<std::size_t>(nmax) + 1, 0);
    c[0] = 1;
    for (int copy = 0; copy < r; ++copy)
        for (int j = 1; j <= nmax; ++j)
            for (int n = j; n <= nmax; ++n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - j)];
    return c;
}

}  // namespace

TEST_CASE("partition canonical form") {
    CHECK(P({3, 1, 0, 0}) == P({3, 1}));
    CHECK(P({}).empty());
    CHECK(P({3, 1}).size() == 4);
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
    CHECK(P({8, 6, 1}).to_string() == "8,6,1");
    CHECK(P({}).to_string() == "-");
}

TEST_CASE("enumerate_partitions") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{P({})});
    CHECK(enumerate_partitions(2) == std::vector<Partition>{P({2}), P({1, 1})});
    CHECK(enumerate_partitions(8).size() == 22);
    for (int n = 0; n <= 12; ++n) {
        const auto all = enumerate_partitions(n);
        CHECK(static_cast<long long>(all.size()) == partition_count(n));
        CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
        for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] > all[i + 1]);
        for (const auto& p : all) CHECK(p.size() == n);
    }
}

TEST_CASE("enumerate_multipartitions") {
    const auto two = enumerate_multipartitions(2, 2);
    REQUIRE(two.size() == 5);
    CHECK(two[0].to_string() == "2|-");
    CHECK(two[1].to_string() == "1,1|-");
    CHECK(two[2].to_string() == "1|1");
    CHECK(two[3].to_string() == "-|2");
    CHECK(two[4].to_string() == "-|1,1");
    CHECK(enumerate_multipartitions(1, 4).size() == 4);
    REQUIRE(enumerate_multipartitions(0, 3).size() == 1);
    CHECK(enumerate_multipartitions(0, 3)[0].to_string() == "-|-|-");
}

TEST_CASE("multipartition counts match the generating series") {
    for (int r = 1; r <= 4; ++r) {
        const auto c = multipartition_counts(20, r);
        for (int n = 0; n <= (r <= 2 ? 20 : 12); ++n) {
            const auto all = enumerate_multipartitions(n, r);
            CHECK(static_cast<long long>(all.size()) == c[static_cast<std::size_t>(n)]);
        }
    }
    const auto p = multipartition_counts(20, 1);
    for (int n = 0; n <= 20; ++n) CHECK(partition_count(n) == p[static_cast<std::size_t>(n)]);
}

TEST_CASE("transpose") {
    CHECK(P({2}).transpose() == P({1, 1}));
    CHECK(P({}).transpose() == P({}));
    CHECK(P({3, 1}).transpose() == P({2, 1, 1}));
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(p.transpose().transpose() == p);
            CHECK(p.transpose().size() == p.size());
        }
}

TEST_CASE("divide_with_remainder examples") {
    auto d = divide_with_remainder(P({8, 6, 1}), 3);
    CHECK(d.quotient == P({1, 1}));
    CHECK(d.remainder == P({5, 3, 1}));
    d = divide_with_remainder(P({2, 1}), 2);
    CHECK(d.quotient == P({}));
    CHECK(d.remainder == P({2, 1}));
    d = divide_with_remainder(P({4}), 2);
    CHECK(d.quotient == P({2}));
    CHECK(d.remainder == P({}));
    CHECK_THROWS_AS(divide_with_remainder(P({4}), 1), std::invalid_argument);
}

TEST_CASE("divide_with_remainder agrees with exhaustive search") {
    for (int n = 0; n <= 12; ++n)
        for (int m = 2; m <= 4; ++m)
            for (const auto& l : enumerate_partitions(n)) {
                const auto d = divide_with_remainder(l, m);
                for (std::size_t i = 0; i < l.length(); ++i)
                    CHECK(m * d.quotient.part(i) + d.remainder.part(i) == l.part(i));
                std::vector<std::vector<int>> maximizers;
                const int best = brute_force_quotient_size(l, m, maximizers);
                CHECK(d.quotient.size() == best);
                CHECK(maximizers.size() == 1);
            }
}

TEST_CASE("hooks order and shapes") {
    auto h = hooks(2, 1);
    REQUIRE(h.size() == 2);
    CHECK(h[0].realize(2, 1).to_string() == "1,1");
    CHECK(h[1].realize(2, 1).to_string() == "2");
    CHECK(h[0].name() == "h_{1,2}");
    h = hooks(1, 2);
    REQUIRE(h.size() == 2);
    CHECK(h[0].realize(1, 2).to_string() == "1|-");
    CHECK(h[1].realize(1, 2).to_string() == "-|1");
    h = hooks(2, 2);
    REQUIRE(h.size() == 4);
    CHECK(h[0] == Hook{1, 2});
    CHECK(h[1] == Hook{1, 1});
    CHECK(h[2] == Hook{2, 2});
    CHECK(h[3] == Hook{2, 1});
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 3; ++r) {
            const auto hs = hooks(n, r);
            CHECK(hs.size() == static_cast<std::size_t>(n * r));
            for (const auto& x : hs) {
                const auto mp = x.realize(n, r);
                CHECK(mp.size() == n);
                CHECK(is_hook(mp));
            }
        }
    CHECK_FALSE(is_hook(parse_multipartition("2,2|-")));
    CHECK_FALSE(is_hook(parse_multipartition("1|1")));
}

TEST_CASE("parsing") {
    CHECK(parse_partition("8,6,1") == P({8, 6, 1}));
    CHECK(parse_partition("-") == P({}));
    CHECK_THROWS_AS(parse_partition("1,2"), ParseError);
    CHECK_THROWS_AS(parse_partition("a"), ParseError);
    CHECK_THROWS_AS(parse_partition(""), ParseError);
    const auto mp = parse_multipartition("8,6,1|2|-");
    CHECK(mp.rank() == 3);
    CHECK(mp.size() == 17);
    CHECK(mp.to_string() == "8,6,1|2|-");
    CHECK_THROWS_AS(parse_multipartition("1||2"), ParseError);
}
