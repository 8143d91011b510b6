#include <doctest.h>

#include "taulat/rational.hpp"
#include "taulat/sampling.hpp"

using taulat::Rational;

TEST_CASE("rational construction and canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2"); // denominator normalized positive
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parse and serialize round-trip") {
    for (const char* s : {"0", "5", "-7", "1/2", "-355/113", "12345678901234567890/7"}) {
        const Rational r = Rational::parse(s);
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK(Rational(5).str_explicit() == "5/1");
    CHECK(Rational(0).str_explicit() == "0/1");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("field axioms on random triples") {
    taulat::Rng g(42);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = taulat::random_rational(g, 20, 9);
        const Rational b = taulat::random_rational(g, 20, 9);
        const Rational c = taulat::random_rational(g, 20, 9);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a - a == Rational(0));
        if (!a.is_zero()) {
            CHECK(a * a.reciprocal() == Rational(1));
            CHECK(b / a * a == b);
        }
    }
}

TEST_CASE("integer powers") {
    const Rational r(-2, 3);
    CHECK(r.pow(0) == Rational(1));
    CHECK(r.pow(2) == Rational(4, 9));
    CHECK(r.pow(3) == Rational(-8, 27));
    CHECK(r.pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("perfect square detection") {
    Rational root;
    CHECK(Rational(9, 4).sqrt_if_square(root));
    CHECK(root == Rational(3, 2));
    CHECK(Rational(0).sqrt_if_square(root));
    CHECK(root == Rational(0));
    CHECK_FALSE(Rational(2).sqrt_if_square(root));
    CHECK_FALSE(Rational(-1).sqrt_if_square(root));
    CHECK_FALSE(Rational(9, 5).sqrt_if_square(root));
}
