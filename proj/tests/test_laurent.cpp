#include "qcrystal/errors.hpp"
#include "qcrystal/laurent.hpp"

#include <doctest.h>

#include <random>

using qcrystal::LaurentScalar;
using qcrystal::Polynomial;

namespace {

LaurentScalar q(long k) { return LaurentScalar::q_power(k); }

Polynomial random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-4, 4);
    std::vector<mpz_class> c;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k)
        c.emplace_back(coef(rng));
    return Polynomial(std::move(c));
}

LaurentScalar random_scalar(std::mt19937& rng) {
    Polynomial den;
    while (den.is_zero())
        den = random_poly(rng, 3);
    return LaurentScalar(random_poly(rng, 3), den) * q(std::uniform_int_distribution<int>(-2, 2)(rng));
}

} // namespace

TEST_CASE("q powers multiply and invert exactly") {
    CHECK(q(1) * q(-1) == LaurentScalar(1));
    CHECK(q(3) * q(-5) == q(-2));
    CHECK(q(0) == LaurentScalar(1));
    CHECK(q(-2).valuation() == -2);
}

TEST_CASE("quantum integers and factorials") {
    CHECK(LaurentScalar::q_integer(1) == LaurentScalar(1));
    CHECK(LaurentScalar::q_integer(2) == q(1) + q(-1));
    CHECK(LaurentScalar::q_integer(3) == q(2) + LaurentScalar(1) + q(-2));
    CHECK(LaurentScalar::q_factorial(3) == LaurentScalar::q_integer(2) * LaurentScalar::q_integer(3));
    CHECK(LaurentScalar::q_factorial(0) == LaurentScalar(1));
}

TEST_CASE("fractions are kept in lowest terms") {
    const LaurentScalar x(Polynomial{-1, 0, 1}, Polynomial{-1, 1}); // (q^2-1)/(q-1)
    CHECK(x == LaurentScalar(Polynomial{1, 1}));
    CHECK(x.denominator() == Polynomial(1));
    const LaurentScalar y(Polynomial{2}, Polynomial{-4});
    CHECK(y == LaurentScalar(Polynomial{-1}, Polynomial{2}));
    CHECK(y.denominator().leading() > 0);
    CHECK(gcd(Polynomial{-1, 0, 1}, Polynomial{1, 2, 1}) == Polynomial{1, 1});
}

TEST_CASE("evaluation at q = 0") {
    const LaurentScalar x(Polynomial{1, 1}, Polynomial{1, -1});
    CHECK(x.at_zero() == 1);
    CHECK(q(1).at_zero() == 0);
    CHECK(LaurentScalar(Polynomial{3}, Polynomial{2, 5}).at_zero() == mpq_class(3, 2));
    CHECK_THROWS_AS(q(-1).at_zero(), qcrystal::VerificationFailure);
    CHECK_FALSE(q(-1).regular_at_zero());
    CHECK(LaurentScalar(0).regular_at_zero());
}

TEST_CASE("inexact division is rejected") {
    CHECK_THROWS_AS(Polynomial({1, 0, 1}).divide_exact(Polynomial{1, 1}), std::domain_error);
    CHECK(Polynomial({-1, 0, 1}).divide_exact(Polynomial{1, 1}) == Polynomial{-1, 1});
    CHECK_THROWS_AS(LaurentScalar(0).inverse(), std::domain_error);
}

TEST_CASE("field identities on random fractions") {
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) {
            CHECK((a * b) / b == a);
            CHECK(b * b.inverse() == LaurentScalar(1));
        }
        // Normal form is idempotent.
        CHECK(LaurentScalar(a.numerator(), a.denominator()) == a);
    }
}
