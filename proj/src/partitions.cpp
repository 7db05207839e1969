#include "gieseker/partitions.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "gieseker/errors.hpp"

namespace gieseker {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> t(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
    return Partition(std::move(t));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("multipartition needs at least one component");
    for (const auto& c : components_) size_ += c.size();
}

std::string Multipartition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += '|';
        out += components_[i].to_string();
    }
    return out;
}

Multipartition Hook::realize(int n, int r) const {
    if (component < 1 || component > r || leg < 1 || leg > n)
        throw std::invalid_argument("hook index out of range");
    std::vector<Partition> comps(static_cast<std::size_t>(r));
    std::vector<int> parts(static_cast<std::size_t>(leg), 1);
    parts[0] = n + 1 - leg;
    comps[static_cast<std::size_t>(component - 1)] = Partition(std::move(parts));
    return Multipartition(std::move(comps));
}

std::string Hook::name() const {
    return "h_{" + std::to_string(component) + "," + std::to_string(leg) + "}";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

void multipartitions_rec(int remaining, int slot, int r, std::vector<Partition>& cur,
                         std::vector<Multipartition>& out) {
    if (slot == r - 1) {
        for (auto& p : enumerate_partitions(remaining)) {
            cur.push_back(std::move(p));
            out.emplace_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int s = remaining; s >= 0; --s) {
        for (auto& p : enumerate_partitions(s)) {
            cur.push_back(std::move(p));
            multipartitions_rec(remaining - s, slot + 1, r, cur, out);
            cur.pop_back();
        }
    }
}

int parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("not an integer: '" + std::string(s) + "'");
    return value;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Multipartition> enumerate_multipartitions(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("enumerate_multipartitions: need n >= 0, r >= 1");
    std::vector<Multipartition> out;
    std::vector<Partition> cur;
    multipartitions_rec(n, 0, r, cur, out);
    return out;
}

long long partition_count(int n) {
    if (n < 0) return 0;
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
    return p[static_cast<std::size_t>(n)];
}

Division divide_with_remainder(const Partition& lambda, int m) {
    if (m < 2) throw std::invalid_argument("divide_with_remainder: m must be at least 2");
    const std::size_t len = lambda.length();
    std::vector<int> q(len, 0), rem(len, 0);
    // Walk from the last row up, taking each quotient gap at its maximum.
    int carry = 0;
    for (std::size_t i = len; i-- > 0;) {
        const int gap = lambda.part(i) - lambda.part(i + 1);
        carry += gap / m;
        q[i] = carry;
        rem[i] = lambda.part(i) - m * q[i];
    }
    return {Partition(std::move(q)), Partition(std::move(rem))};
}

std::vector<Hook> hooks(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("hooks: need n >= 1, r >= 1");
    std::vector<Hook> out;
    out.reserve(static_cast<std::size_t>(n * r));
    for (int i = 1; i <= r; ++i)
        for (int d = n; d >= 1; --d) out.push_back({i, d});
    return out;
}

bool is_hook(const Multipartition& sigma) {
    int nonempty = 0;
    for (const auto& c : sigma.components()) {
        if (c.empty()) continue;
        ++nonempty;
        for (std::size_t j = 1; j < c.length(); ++j)
            if (c.part(j) != 1) return false;
    }
    return nonempty == 1;
}

Partition parse_partition(std::string_view text) {
    if (text == "-") return {};
    if (text.empty()) throw ParseError("empty partition text; use '-' for the empty partition");
    std::vector<int> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto tok = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
        const int v = parse_int(tok);
        if (v <= 0) throw ParseError("partition parts must be positive: '" + std::string(text) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
    }
}

Multipartition parse_multipartition(std::string_view text) {
    std::vector<Partition> comps;
    std::size_t start = 0;
    while (true) {
        const auto bar = text.find('|', start);
        comps.push_back(parse_partition(
            text.substr(start, bar == std::string_view::npos ? text.size() - start : bar - start)));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return Multipartition(std::move(comps));
}

}  // namespace gieseker
