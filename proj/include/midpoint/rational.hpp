#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace midpoint {

// Arbitrary-precision rational number, always held in lowest terms with a
// positive denominator. Backed by GMP's mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);
    // Throws std::domain_error when denominator == 0.
    Rational(std::int64_t numerator, std::int64_t denominator);
    explicit Rational(mpq_class value);

    // Accepts "[-+]digits" or "[-+]digits/digits". Returns nullopt for
    // anything else, including a zero denominator.
    static std::optional<Rational> parse(std::string_view text);

    const mpz_class& numerator() const noexcept { return value_.get_num(); }
    const mpz_class& denominator() const noexcept { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return denominator() == 1; }

    // One-way conversion; there is deliberately no inverse.
    double to_double() const { return value_.get_d(); }
    // "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    // Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace midpoint
