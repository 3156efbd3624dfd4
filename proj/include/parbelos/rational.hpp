#pragma once

/**
 * Exact rational scalar.
 *
 * Backed by GMP. Values are always held in canonical form: the denominator is
 * positive, numerator and denominator are coprime, and zero is 0/1. Canonical
 * forms make equality structural, which every predicate in the kernel relies
 * on. There is deliberately no conversion to floating point; `to_decimal` is
 * for reports and rendering only.
 */

#include <compare>
#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace parbelos {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

    explicit Rational(const BigInt& value) : value_(value) {}

    /// Throws GeometryError(ZeroDenominator) when `den` is zero.
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p/q" or "p" with an optional leading sign and no whitespace.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    /// "p/q", or "p" when the denominator is one.
    std::string str() const;

    /// Fixed-point decimal rounded half away from zero to `digits` places,
    /// with trailing zeros (and a bare trailing point) removed.
    std::string to_decimal(int digits) const;

    const mpq_class& gmp() const { return value_; }

private:
    mpq_class value_;
};

/// make_rational(n, d): canonical n/d, sign on the numerator.
Rational make_rational(const BigInt& num, const BigInt& den);

Rational abs(const Rational& value);

/// Exact square root when `value` is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

/// Largest integer <= value.
BigInt floor(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace parbelos
