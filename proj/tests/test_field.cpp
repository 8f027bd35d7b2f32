#include <doctest.h>

#include <random>

#include "novikov/field.hpp"

using namespace novikov;

TEST_CASE("field construction") {
    Field q = Field::rationals();
    CHECK(q.characteristic() == 0);

    Field f7 = Field::prime(7);
    CHECK(f7.characteristic() == 7);
    CHECK(Field::prime(2).characteristic() == 2);
    CHECK(Field::prime(13).characteristic() == 13);

    CHECK_THROWS_WITH_AS(Field::prime(6), doctest::Contains("divisor 2"), ParseError);
    CHECK_THROWS_AS(Field::prime(1), ParseError);
    CHECK_THROWS_AS(Field::prime(91), ParseError);  // 7 * 13
}

TEST_CASE("rational arithmetic and canonical form") {
    Field q = Field::rationals();
    CHECK(q.add(q.parse("1/2"), q.parse("1/3")) == q.parse("5/6"));
    CHECK(q.parse("2/4") == q.parse("1/2"));
    CHECK(q.parse("-6/4").str() == "-3/2");
    CHECK(q.sub(q.one(), q.one()).is_zero());
    CHECK(q.div(q.parse("3"), q.parse("-2")) == q.parse("-3/2"));
    CHECK_THROWS_AS(q.div(q.one(), q.zero()), DomainError);
    CHECK_THROWS_AS(q.parse("1/0"), ParseError);
    CHECK_THROWS_AS(q.parse("abc"), ParseError);
}

TEST_CASE("prime field arithmetic") {
    Field f7 = Field::prime(7);
    CHECK(f7.mul(f7.from_int(3), f7.from_int(5)) == f7.one());  // 15 mod 7
    CHECK(f7.from_int(-1) == f7.from_int(6));
    CHECK(f7.parse("9") == f7.from_int(2));
    CHECK_THROWS_AS(f7.parse("1/2"), ParseError);
    CHECK_THROWS_AS(f7.div(f7.one(), f7.zero()), DomainError);

    // rationals convert when the denominator is a unit
    CHECK(f7.from_rational(mpq_class("1/2")) == f7.from_int(4));
    Field f2 = Field::prime(2);
    CHECK_THROWS_AS(f2.from_rational(mpq_class("1/2")), DomainError);
}

TEST_CASE("mixed-field operands rejected") {
    Field q = Field::rationals();
    Field f5 = Field::prime(5);
    CHECK_THROWS_AS(q.add(q.one(), f5.one()), DomainError);
    CHECK_THROWS_AS(f5.mul(f5.one(), q.one()), DomainError);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    auto rand_q = [&](const Field& f) {
        long num = static_cast<long>(rng() % 41) - 20;
        long den = 1 + static_cast<long>(rng() % 9);
        return f.div(f.from_int(num), f.from_int(den));
    };
    Field q = Field::rationals();
    for (int t = 0; t < 200; ++t) {
        Scalar a = rand_q(q), b = rand_q(q), c = rand_q(q);
        CHECK(q.mul(q.mul(a, b), c) == q.mul(a, q.mul(b, c)));
        CHECK(q.add(q.add(a, b), c) == q.add(a, q.add(b, c)));
        CHECK(q.mul(a, q.add(b, c)) == q.add(q.mul(a, b), q.mul(a, c)));
    }
    Field f11 = Field::prime(11);
    for (int t = 0; t < 200; ++t) {
        Scalar a = f11.from_int(static_cast<long>(rng() % 11));
        Scalar b = f11.from_int(static_cast<long>(rng() % 11));
        Scalar c = f11.from_int(static_cast<long>(rng() % 11));
        CHECK(f11.mul(f11.mul(a, b), c) == f11.mul(a, f11.mul(b, c)));
        CHECK(f11.mul(a, f11.add(b, c)) == f11.add(f11.mul(a, b), f11.mul(a, c)));
    }
}

TEST_CASE("inverses exhaustively for p <= 101") {
    for (unsigned long p = 2; p <= 101; ++p) {
        if (composite_witness(p)) continue;
        Field f = Field::prime(p);
        for (unsigned long x = 1; x < p; ++x) {
            Scalar s = f.from_int(static_cast<long>(x));
            CHECK(f.mul(s, f.inverse(s)) == f.one());
        }
    }
}
