#include "parbelos/rational.hpp"

#include <cctype>
#include <ostream>

#include "parbelos/error.hpp"

namespace parbelos {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw GeometryError(ErrorKind::ZeroDenominator, "denominator is zero");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw GeometryError(ErrorKind::InvalidRational,
                            "malformed rational '" + std::string(text) + "'");
    }
    BigInt num(std::string(num_text), 10);
    const BigInt den(std::string(den_text), 10);
    if (negative) num = -num;
    return Rational(num, den);
}

Rational Rational::operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw GeometryError(ErrorKind::ZeroDenominator, "division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 0) digits = 0;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

    const BigInt num = ::abs(value_.get_num());
    const BigInt& den = value_.get_den();
    // round(|v| * 10^digits), halves away from zero
    const BigInt scaled = (2 * num * scale + den) / (2 * den);

    std::string magnitude = scaled.get_str();
    if (digits > 0) {
        if (magnitude.size() <= static_cast<size_t>(digits)) {
            magnitude.insert(0, static_cast<size_t>(digits) + 1 - magnitude.size(), '0');
        }
        magnitude.insert(magnitude.size() - static_cast<size_t>(digits), ".");
        while (magnitude.back() == '0') magnitude.pop_back();
        if (magnitude.back() == '.') magnitude.pop_back();
    }
    if (sign() < 0 && scaled != 0) magnitude.insert(0, "-");
    return magnitude;
}

Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::optional<Rational> exact_sqrt(const Rational& value) {
    if (value.sign() < 0) return std::nullopt;
    const BigInt num = value.numerator();
    const BigInt den = value.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return Rational(sqrt(num), sqrt(den));
}

BigInt floor(const Rational& value) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), value.gmp().get_num_mpz_t(), value.gmp().get_den_mpz_t());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace parbelos
