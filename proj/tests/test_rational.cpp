#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "midpoint/rational.hpp"

using midpoint::Rational;

TEST(Rational, StoredInLowestTermsWithPositiveDenominator) {
    const Rational r(6, -4);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(0, -7).to_string(), "0");
    EXPECT_EQ(Rational(0, -7).denominator(), 1);
}

TEST(Rational, ZeroDenominatorThrows) {
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
    EXPECT_EQ(Rational::parse("3")->to_string(), "3");
    EXPECT_EQ(Rational::parse("-7")->to_string(), "-7");
    EXPECT_EQ(Rational::parse("+007")->to_string(), "7");
    EXPECT_EQ(Rational::parse("22/7")->to_string(), "22/7");
    EXPECT_EQ(Rational::parse("-10/4")->to_string(), "-5/2");
    EXPECT_EQ(Rational::parse("123456789012345678901234567890/3")->to_string(), "41152263004115226300411522630");
}

TEST(Rational, ParseRejectsMalformedInput) {
    for (const char* bad : {"", "-", "1.5", "1/0", "1/", "/2", "a", "1/-2", "1 /2", "0x10", "1e3"}) {
        EXPECT_FALSE(Rational::parse(bad).has_value()) << bad;
    }
}

TEST(Rational, OrderingAndEquality) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(-3).sign(), -1);
    EXPECT_TRUE(Rational().is_zero());
}

TEST(Rational, FieldAxiomsHoldExactly) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        const Rational c(num(rng), den(rng));
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) + c, a + (b + c));
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
        }
        // Results stay canonical.
        const Rational s = a + b;
        EXPECT_GT(s.denominator(), 0);
        EXPECT_EQ(gcd(s.numerator(), s.denominator()), s.is_zero() ? s.denominator() : 1);
    }
}

TEST(Rational, RepeatedHalvingStaysExact) {
    Rational x(1);
    for (int i = 0; i < 200; ++i) x /= Rational(2);
    Rational y = x;
    for (int i = 0; i < 200; ++i) y *= Rational(2);
    EXPECT_EQ(y, Rational(1));
    EXPECT_EQ(x.denominator().get_str(2).size(), 201u);
}

TEST(Rational, ToDoubleIsCloseToValue) {
    EXPECT_DOUBLE_EQ(Rational(1, 3).to_double(), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(Rational(-22, 7).to_double(), -22.0 / 7.0);
}
