#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "seidel/binomial.hpp"
#include "seidel/integer.hpp"
#include "seidel/rational.hpp"

using seidel::Integer;
using seidel::Rational;
using seidel::binomial;
using seidel::binomial_any;

namespace {

// Test-side oracle: Pascal's triangle, independent of the multiplicative
// implementation in binomial().
std::vector<std::vector<Integer>> pascal_table(int max_n) {
    std::vector<std::vector<Integer>> t(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        t[n].resize(n + 1);
        t[n][0] = t[n][n] = Integer(1);
        for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

Integer random_integer(std::mt19937_64& rng, int max_limbs) {
    int limbs = 1 + static_cast<int>(rng() % max_limbs);
    Integer v(0);
    for (int i = 0; i < limbs; ++i) {
        v = v * Integer(static_cast<long long>(1) << 62) * Integer(4) +
            Integer(static_cast<long long>(rng() >> 1));
    }
    if (rng() & 1) v = -v;
    return v;
}

}  // namespace

TEST_CASE("integer small arithmetic matches native") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        long long a = static_cast<long long>(rng() % 20001) - 10000;
        long long b = static_cast<long long>(rng() % 20001) - 10000;
        CHECK(Integer(a) + Integer(b) == Integer(a + b));
        CHECK(Integer(a) - Integer(b) == Integer(a - b));
        CHECK(Integer(a) * Integer(b) == Integer(a * b));
        if (b != 0) {
            CHECK(Integer(a) / Integer(b) == Integer(a / b));
            CHECK(Integer(a) % Integer(b) == Integer(a % b));
        }
        CHECK((Integer(a) <=> Integer(b)) == (a <=> b));
    }
}

TEST_CASE("integer divmod reconstructs the dividend") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1500; ++i) {
        Integer a = random_integer(rng, 6);
        Integer b = random_integer(rng, 3);
        if (b.is_zero()) continue;
        auto [q, r] = Integer::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        // remainder carries the dividend's sign
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
    CHECK_THROWS_AS(Integer(1) / Integer(0), std::domain_error);
}

TEST_CASE("integer gcd agrees with euclidean division") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 600; ++i) {
        Integer a = random_integer(rng, 4).abs();
        Integer b = random_integer(rng, 4).abs();
        Integer g = Integer::gcd(a, b);
        // independent route: remainder chain
        Integer x = a, y = b;
        while (!y.is_zero()) {
            Integer r = x % y;
            x = y;
            y = r;
        }
        CHECK(g == x);
        if (!g.is_zero()) {
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
        }
    }
    CHECK(Integer::gcd(Integer(0), Integer(0)) == Integer(0));
    CHECK(Integer::gcd(Integer(0), Integer(-6)) == Integer(6));
}

TEST_CASE("integer text round trip at large magnitudes") {
    Integer two_pow_10000 = pow_u(Integer(2), 10000);
    std::string s = two_pow_10000.to_string();
    CHECK(s.size() == 3011);  // digit count of 2^10000
    CHECK(Integer::from_string(s) == two_pow_10000);

    Integer neg = -two_pow_10000;
    CHECK(Integer::from_string(neg.to_string()) == neg);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        Integer v = random_integer(rng, 40);
        CHECK(Integer::from_string(v.to_string()) == v);
    }
    CHECK(Integer(0).to_string() == "0");
    CHECK(Integer(-1).to_string() == "-1");
    CHECK_THROWS_AS(Integer::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Integer::from_string("12x"), std::invalid_argument);
}

TEST_CASE("factorial spot value") {
    Integer f(1);
    for (int i = 2; i <= 52; ++i) f *= Integer(i);
    CHECK(f.to_string() ==
          "80658175170943878571660636856403766975289505440883277824000000000000");
}

TEST_CASE("binomial examples and conventions") {
    CHECK(binomial(7, 0) == Integer(1));
    CHECK(binomial(3, 5) == Integer(0));
    CHECK(binomial(5, -1) == Integer(0));
    CHECK(binomial(52, 5) == Integer(2598960));
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("binomial matches pascal recurrence up to 60") {
    auto t = pascal_table(60);
    for (int n = 0; n <= 60; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == t[n][k]);
}

TEST_CASE("binomial column sums telescope") {
    // sum over t in [a,b] of C(t,a) = C(b+1,a+1)
    for (int a = 0; a <= 40; ++a) {
        for (int b = a; b <= 40; ++b) {
            Integer sum(0);
            for (int t = a; t <= b; ++t) sum += binomial(t, a);
            CHECK(sum == binomial(b + 1, a + 1));
        }
    }
}

TEST_CASE("generalized binomial extends the standard one") {
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= 20; ++k) CHECK(binomial_any(n, k) == binomial(n, k));
    // reflection: C(-m, k) = (-1)^k C(m+k-1, k)
    for (int m = 1; m <= 10; ++m) {
        for (int k = 0; k <= 10; ++k) {
            Integer expect = binomial(m + k - 1, k);
            if (k & 1) expect = -expect;
            CHECK(binomial_any(-m, k) == expect);
        }
    }
    CHECK(binomial_any(-1, 0) == Integer(1));
    CHECK(binomial_any(5, -2) == Integer(0));
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(0, 7).denominator() == Integer(1));
    CHECK(Rational(25, 12).to_string() == "25/12");
    CHECK(Rational(-10, -4).to_string() == "5/2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic examples") {
    CHECK(Rational(1, 1) + Rational(1, 2) == Rational(3, 2));
    CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1, 1));
    CHECK(Rational(3, 2) + Rational(1, 3) == Rational(11, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(1, 2) / Rational(-3, 4) == Rational(-2, 3));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("rational text round trip") {
    CHECK(Rational::from_string("-3/2") == Rational(-3, 2));
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(Rational::from_string("0") == Rational(0));
    CHECK(Rational::from_string("4/6") == Rational(2, 3));
    std::mt19937_64 rng(23);
    for (int i = 0; i < 500; ++i) {
        long long p = static_cast<long long>(rng() % 2001) - 1000;
        long long q = 1 + static_cast<long long>(rng() % 999);
        Rational r(p, q);
        CHECK(Rational::from_string(r.to_string()) == r);
    }
}

TEST_CASE("rational results stay canonical under arithmetic") {
    // cross-check the reduced addition path against naive construction
    std::mt19937_64 rng(29);
    for (int i = 0; i < 3000; ++i) {
        long long a = static_cast<long long>(rng() % 399) - 199;
        long long b = 1 + static_cast<long long>(rng() % 199);
        long long c = static_cast<long long>(rng() % 399) - 199;
        long long d = 1 + static_cast<long long>(rng() % 199);
        Rational x(a, b), y(c, d);
        Rational sum = x + y;
        Rational naive(Integer(a * d + c * b), Integer(b * d));
        CHECK(sum == naive);
        CHECK(Integer::gcd(sum.numerator(), sum.denominator()) == Integer(1));
        CHECK(!sum.denominator().is_negative());
        Rational prod = x * y;
        CHECK(prod == Rational(Integer(a * c), Integer(b * d)));
    }
}

TEST_CASE("rational field laws on random values") {
    std::mt19937_64 rng(31);
    auto pick = [&rng]() {
        long long p = static_cast<long long>(rng() % 41) - 20;
        long long q = 1 + static_cast<long long>(rng() % 20);
        return Rational(p, q);
    };
    for (int i = 0; i < 400; ++i) {
        Rational a = pick(), b = pick(), c = pick();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        if (!a.is_zero()) CHECK(a / a == Rational(1));
    }
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
}
