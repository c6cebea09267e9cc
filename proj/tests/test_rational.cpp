#include <doctest.h>

#include <numeric>
#include <string>

#include "blpack/rational.hpp"
#include "support.hpp"

using namespace blpack;
using support::Frac;
using support::Rng;
using support::to_rational;

namespace {

Rational R(long long n, long long d) { return Rational(n, d); }

}  // namespace

TEST_CASE("BigInt construction and decimal round trip") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(1234567890123456789LL).to_string() == "1234567890123456789");
    CHECK(BigInt::from_string("-000123").to_string() == "-123");
    CHECK(BigInt::from_string("+42").to_string() == "42");
    CHECK(BigInt::from_string("0").is_zero());
    CHECK(BigInt::from_string("-0").is_zero());
    CHECK_THROWS_AS(BigInt::from_string(""), ParseError);
    CHECK_THROWS_AS(BigInt::from_string("12a"), ParseError);

    Rng rng(101);
    for (int i = 0; i < 500; ++i) {
        long long v = static_cast<long long>(rng.eng());
        CHECK(BigInt::from_string(BigInt(v).to_string()) == BigInt(v));
        CHECK(BigInt(v).to_int64() == v);
    }
}

TEST_CASE("BigInt arithmetic agrees with 128-bit arithmetic") {
    Rng rng(202);
    for (int i = 0; i < 2000; ++i) {
        long long a = static_cast<long long>(rng.eng() % 2000000000000ull) - 1000000000000LL;
        long long b = static_cast<long long>(rng.eng() % 2000000000000ull) - 1000000000000LL;
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        __int128 prod = static_cast<__int128>(a) * b;
        CHECK(to_rational(Frac{prod, 1}) == Rational(BigInt(a) * BigInt(b), BigInt(1)));
        CHECK((BigInt(a).compare(BigInt(b)) < 0) == (a < b));
    }
}

TEST_CASE("BigInt multi-limb multiplication hits a precomputed digit pattern") {
    // (10^60 + 7) * (10^40 + 3) = 10^100 + 3*10^60 + 7*10^40 + 21
    BigInt a = BigInt::from_string("1" + std::string(59, '0') + "7");
    BigInt b = BigInt::from_string("1" + std::string(39, '0') + "3");
    std::string expect(101, '0');
    expect[0] = '1';
    expect[101 - 1 - 60] = '3';
    expect[101 - 1 - 40] = '7';
    expect[99] = '2';
    expect[100] = '1';
    CHECK((a * b).to_string() == expect);
}

TEST_CASE("BigInt divmod: truncated quotient, remainder identity") {
    CHECK_THROWS_AS(BigInt::exact_div(BigInt(1), BigInt(0)), Error);

    auto check_divmod = [](const BigInt& a, const BigInt& b) {
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    };
    check_divmod(BigInt(7), BigInt(2));
    check_divmod(BigInt(-7), BigInt(2));
    check_divmod(BigInt(7), BigInt(-2));
    check_divmod(BigInt(-7), BigInt(-2));

    Rng rng(303);
    for (int i = 0; i < 1000; ++i) {
        long long a = static_cast<long long>(rng.eng() % 2000000000000000ull) - 1000000000000000LL;
        long long b = static_cast<long long>(rng.eng() % 2000000ull) - 1000000LL;
        if (b == 0) continue;
        BigInt q, r;
        BigInt::divmod(BigInt(a), BigInt(b), q, r);
        CHECK(q.to_int64() == a / b);
        CHECK(r.to_int64() == a % b);
    }

    // Multi-limb divisor exercises the binary long-division path.
    BigInt big_a = BigInt::from_string(std::string("123456789") + std::string(50, '9'));
    BigInt big_b = BigInt::from_string("340282366920938463463374607431768211507");  // > 2^128
    check_divmod(big_a, big_b);
    check_divmod(big_a * big_b + BigInt(12345), big_b);
    CHECK(BigInt::exact_div(big_a * big_b, big_b) == big_a);
}

TEST_CASE("BigInt gcd") {
    CHECK(BigInt::gcd(BigInt(0), BigInt(0)).is_zero());
    CHECK(BigInt::gcd(BigInt(0), BigInt(-6)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));

    BigInt two_pow_100 = BigInt::from_string("1267650600228229401496703205376");
    CHECK(BigInt::gcd(two_pow_100 * BigInt(3), two_pow_100 * BigInt(5)) == two_pow_100);

    Rng rng(404);
    for (int i = 0; i < 500; ++i) {
        long long a = static_cast<long long>(rng.eng() % 1000000000ull);
        long long b = static_cast<long long>(rng.eng() % 1000000000ull);
        CHECK(BigInt::gcd(BigInt(a), BigInt(b)).to_int64() == std::gcd(a, b));
    }
}

TEST_CASE("Rational canonical form") {
    CHECK(R(2, 4).to_string() == "1/2");
    CHECK(R(-2, 4).to_string() == "-1/2");
    CHECK(R(2, -4).to_string() == "-1/2");
    CHECK(R(-2, -4).to_string() == "1/2");
    CHECK(R(0, 7).to_string() == "0");
    CHECK(R(0, 7).den() == BigInt(1));
    CHECK(R(6, 3).to_string() == "2");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("Rational parsing is exact") {
    CHECK(Rational::parse("0.1") == R(1, 10));
    CHECK(Rational::parse("3.25") == R(13, 4));
    CHECK(Rational::parse("-4.5") == R(-9, 2));
    CHECK(Rational::parse("7/3") == R(7, 3));
    CHECK(Rational::parse("-7/3") == R(-7, 3));
    CHECK(Rational::parse("4") == Rational(4));
    CHECK(Rational::parse("+2") == Rational(2));
    CHECK(Rational::parse("0.333333") == R(333333, 1000000));
    CHECK(Rational::parse("2.50") == R(5, 2));

    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("."), ParseError);
    CHECK_THROWS_AS(Rational::parse("1."), ParseError);
    CHECK_THROWS_AS(Rational::parse(".5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.2/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1e3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1 "), ParseError);
    CHECK_THROWS_AS(Rational::parse("2/-3"), ParseError);
}

TEST_CASE("Rational arithmetic agrees with an independent 128-bit fraction oracle") {
    Rng rng(505);
    for (int i = 0; i < 2000; ++i) {
        long long q = rng.range(1, 1000000);  // denominators up to 10^6
        long long n1 = rng.range(-20 * q, 20 * q);
        long long n2 = rng.range(-20 * q, 20 * q);
        Rational a = R(n1, q);
        Rational b = R(n2, q);
        Frac fa = Frac::of(n1, q);
        Frac fb = Frac::of(n2, q);
        CHECK(a + b == to_rational(fa + fb));
        CHECK(a - b == to_rational(fa - fb));
        CHECK(a * b == to_rational(fa * fb));
        if (n2 != 0) CHECK(a / b == to_rational(Frac{fa.num * fb.den, fa.den * fb.num}));
        CHECK((a < b) == (fa.num < fb.num));
    }
}

TEST_CASE("Rational invariants after arithmetic: reduced, positive denominator") {
    Rng rng(606);
    for (int i = 0; i < 1000; ++i) {
        Rational a = R(rng.range(-100, 100), rng.range(1, 60));
        Rational b = R(rng.range(-100, 100), rng.range(1, 60));
        for (const Rational& r : {a + b, a - b, a * b}) {
            CHECK(r.den().sign() > 0);
            CHECK(BigInt::gcd(r.num(), r.den()).is_one());
        }
    }
}

TEST_CASE("Rational ordering and min/max") {
    CHECK(R(1, 3) < R(1, 2));
    CHECK(R(-1, 2) < R(-1, 3));
    CHECK(min(R(1, 3), R(1, 2)) == R(1, 3));
    CHECK(max(R(1, 3), R(1, 2)) == R(1, 2));
    CHECK(R(2, 6) == R(1, 3));
}

TEST_CASE("Rational decimal rendering") {
    CHECK(R(1, 2).decimal_string(9) == "0.5");
    CHECK(R(-1, 2).decimal_string(9) == "-0.5");
    CHECK(R(1, 3).decimal_string(4) == "0.3333");
    CHECK(Rational(7).decimal_string(9) == "7");
    CHECK(R(0, 1).decimal_string(9) == "0");
    CHECK(R(45, 10).decimal_string(9) == "4.5");
}

TEST_CASE("Rational to_string round trip") {
    Rng rng(707);
    for (int i = 0; i < 500; ++i) {
        Rational r = R(rng.range(-100000, 100000), rng.range(1, 100000));
        CHECK(Rational::parse(r.to_string()) == r);
    }
}
