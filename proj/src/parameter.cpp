#include "gieseker/parameter.hpp"

#include <cctype>
#include <stdexcept>

#include "gieseker/errors.hpp"

namespace gieseker {

ParameterValue ParameterValue::rational(mpq_class q) {
    q.canonicalize();
    ParameterValue v;
    v.value_ = std::move(q);
    return v;
}

ParameterValue ParameterValue::rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return rational(mpq_class(num, den));
}

ParameterValue ParameterValue::irrational() { return {}; }

const mpq_class& ParameterValue::value() const {
    if (!value_) throw std::logic_error("irrational parameter has no rational value");
    return *value_;
}

std::optional<long> ParameterValue::denominator(long bound) const {
    if (!value_) return std::nullopt;
    const mpz_class& q = value_->get_den();
    if (cmp(q, bound) > 0) return std::nullopt;
    return q.get_si();
}

std::optional<mpz_class> ParameterValue::exact_denominator() const {
    if (!value_) return std::nullopt;
    return value_->get_den();
}

ParameterValue ParameterValue::shifted(long k) const {
    if (!value_) return *this;
    return rational(*value_ + k);
}

ParameterValue ParameterValue::reflected(long r) const {
    if (!value_) return *this;
    return rational(-*value_ - r);
}

std::string ParameterValue::to_string() const { return value_ ? value_->get_str() : "irrational"; }

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class to_mpz(std::string_view s) {
    std::string t(s);
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return mpz_class(t, 10);
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_text(num)) throw ParseError("not an exact rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return mpq_class(to_mpz(num));
    const auto den = text.substr(slash + 1);
    if (!is_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("not an exact rational: '" + std::string(text) + "'");
    mpz_class d = to_mpz(den);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    mpq_class q(to_mpz(num), d);
    q.canonicalize();
    return q;
}

ParameterValue parse_parameter(std::string_view text) {
    if (text == "irrational") return ParameterValue::irrational();
    return ParameterValue::rational(parse_rational(text));
}

}  // namespace gieseker
