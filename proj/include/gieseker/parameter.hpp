#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace gieseker {

/// Quantization parameter: an exact rational, or the symbolic tag for an
/// irrational value. No floating point is involved anywhere.
class ParameterValue {
public:
    static ParameterValue rational(mpq_class q);
    static ParameterValue rational(long num, long den = 1);
    static ParameterValue irrational();

    bool is_rational() const noexcept { return value_.has_value(); }
    bool is_irrational() const noexcept { return !value_.has_value(); }
    /// Throws std::logic_error for the irrational tag.
    const mpq_class& value() const;

    /// Reduced denominator if it is at most `bound`, nullopt ("infinite")
    /// otherwise. Irrational values always give nullopt.
    std::optional<long> denominator(long bound) const;
    /// Reduced denominator, nullopt for irrational values.
    std::optional<mpz_class> exact_denominator() const;

    bool is_positive() const noexcept { return value_ && sgn(*value_) > 0; }
    bool is_negative() const noexcept { return value_ && sgn(*value_) < 0; }

    /// lambda + k; the irrational tag is preserved.
    ParameterValue shifted(long k) const;
    /// -lambda - r.
    ParameterValue reflected(long r) const;

    /// Canonical rendering: "p/q" reduced, integers as "p", irrational as "irrational".
    std::string to_string() const;

    friend bool operator==(const ParameterValue& a, const ParameterValue& b) { return a.value_ == b.value_; }

private:
    std::optional<mpq_class> value_;
};

/// Accepts "p/q", "p" and "irrational". Decimal or floating forms are rejected.
ParameterValue parse_parameter(std::string_view text);

/// Exact rational from "p/q" or "p".
mpq_class parse_rational(std::string_view text);

}  // namespace gieseker
