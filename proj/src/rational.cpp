#include "midpoint/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace midpoint {

namespace {

mpz_class from_int64(std::int64_t value) {
    if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
        return mpz_class(static_cast<long>(value));
    } else {
        // No int64 constructor on LLP64 targets.
        return mpz_class(std::to_string(value), 10);
    }
}

bool all_digits(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(from_int64(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(from_int64(numerator), from_int64(denominator));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string_view num_text = text;
    std::string_view den_text = "1";
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num_text = text.substr(0, slash);
        den_text = text.substr(slash + 1);
    }
    if (!all_digits(num_text) || !all_digits(den_text)) return std::nullopt;

    mpz_class num(std::string(num_text), 10);
    mpz_class den(std::string(den_text), 10);
    if (den == 0) return std::nullopt;
    if (negative) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const {
    if (is_integer()) return numerator().get_str(10);
    return numerator().get_str(10) + "/" + denominator().get_str(10);
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
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace midpoint
