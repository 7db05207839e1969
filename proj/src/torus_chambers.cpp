#include "gieseker/torus_chambers.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "gieseker/diagnostics.hpp"
#include "gieseker/errors.hpp"
#include "gieseker/partitions.hpp"

namespace gieseker {

bool Cocharacter::is_zero() const noexcept {
    return k == 0 && std::all_of(d.begin(), d.end(), [](long x) { return x == 0; });
}

std::string Cocharacter::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d[i]);
    }
    return out + ";" + std::to_string(k);
}

namespace {

long parse_long(std::string_view s, std::string_view whole) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("malformed cocharacter '" + std::string(whole) + "', expected 'd1,...,dr;k'");
    return v;
}

}  // namespace

Cocharacter parse_cocharacter(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
        throw ParseError("malformed cocharacter '" + std::string(text) + "', expected 'd1,...,dr;k'");
    Cocharacter nu;
    const auto ds = text.substr(0, semi);
    std::size_t start = 0;
    while (true) {
        const auto comma = ds.find(',', start);
        nu.d.push_back(parse_long(ds.substr(start, comma == std::string_view::npos ? ds.size() - start : comma - start), text));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    nu.k = parse_long(text.substr(semi + 1), text);
    return nu;
}

long Wall::evaluate(const Cocharacter& nu) const {
    if (kind == Kind::k_zero) return nu.k;
    return nu.d.at(static_cast<std::size_t>(i - 1)) - nu.d.at(static_cast<std::size_t>(j - 1)) - s * nu.k;
}

std::string Wall::to_string() const {
    if (kind == Kind::k_zero) return "k=0";
    const std::string lhs = "d_" + std::to_string(i) + "-d_" + std::to_string(j) + "=";
    if (s == 0) return lhs + "0";
    if (s == 1) return lhs + "k";
    if (s == -1) return lhs + "-k";
    return lhs + std::to_string(s) + "k";
}

WallSet walls(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("walls: need n, r >= 1");
    WallSet ws{n, r, {}};
    ws.walls.push_back({});
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            for (long s = -(n - 1); s <= n - 1; ++s) ws.walls.push_back({Wall::Kind::difference, i, j, s});
    return ws;
}

std::optional<Wall> violated_wall(const Cocharacter& nu, int n) {
    const auto ws = walls(n, std::max(nu.rank(), 1));
    for (const auto& w : ws.walls)
        if (w.evaluate(nu) == 0) return w;
    return std::nullopt;
}

bool is_generic(const Cocharacter& nu, int n) {
    if (nu.d.empty()) throw std::invalid_argument("cocharacter needs r >= 1 entries");
    if (nu.is_zero()) throw std::invalid_argument("genericity is undefined for the zero cocharacter");
    return !violated_wall(nu, n).has_value();
}

bool is_dominant(const Cocharacter& nu, int n) {
    if (nu.d.empty()) throw std::invalid_argument("cocharacter needs r >= 1 entries");
    if (nu.k < 1) return false;
    for (std::size_t i = 0; i + 1 < nu.d.size(); ++i)
        if (nu.d[i] - nu.d[i + 1] <= static_cast<long>(n) * nu.k) return false;
    return true;
}

Cocharacter dominant_cocharacter(int n, int r) {
    Cocharacter nu;
    for (int i = r - 1; i >= 0; --i) nu.d.push_back(static_cast<long>(i) * (n + 1));
    nu.k = 1;
    return nu;
}

NonGenericError::NonGenericError(const Cocharacter& nu, const Wall& wall)
    : std::invalid_argument("cocharacter " + nu.to_string() + " lies on the wall " + wall.to_string()),
      wall_(wall) {}

bool same_chamber(const Cocharacter& a, const Cocharacter& b, int n) {
    if (a.rank() != b.rank()) throw std::invalid_argument("same_chamber: cocharacters of different rank");
    for (const auto* nu : {&a, &b}) {
        if (nu->is_zero()) throw std::invalid_argument("genericity is undefined for the zero cocharacter");
        if (auto w = violated_wall(*nu, n)) throw NonGenericError(*nu, *w);
    }
    const auto sign = [](long x) { return (x > 0) - (x < 0); };
    for (const auto& w : walls(n, a.rank()).walls)
        if (sign(w.evaluate(a)) != sign(w.evaluate(b))) return false;
    return true;
}

std::vector<FixedComponent> fixed_components_k0(const Cocharacter& nu0, int n) {
    if (nu0.k != 0) throw std::invalid_argument("fixed_components_k0: cocharacter must have k = 0");
    if (nu0.d.empty()) throw std::invalid_argument("cocharacter needs r >= 1 entries");
    if (std::set<long>(nu0.d.begin(), nu0.d.end()).size() != nu0.d.size())
        throw HypothesisError("k = 0 fixed-locus description needs pairwise distinct d_i",
                              "k = 0 fixed locus as products of Hilbert schemes");
    std::vector<FixedComponent> out;
    for (auto& comp : compositions(n, nu0.rank())) {
        FixedComponent c;
        c.dimension = 2 * n;
        c.fixed_points = 1;
        for (int ni : comp) c.fixed_points *= partition_count(ni);
        c.composition = std::move(comp);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace gieseker
