#include "doctest.h"

#include "detkit/fields.hpp"
#include "detkit/gfp.hpp"
#include "detkit/rational.hpp"
#include "detkit/rng.hpp"

using namespace detkit;

TEST_CASE("splitmix64 matches the reference sequence") {
    // Reference outputs for seed 0; pins the generator across implementations.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("rational arithmetic examples") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(7, 3) - Rational(7, 3) == Rational(0));
    CHECK(Rational(3, 4).inverse() == Rational(4, 3));
    CHECK(Rational(1).inverse() == Rational(1));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK((Rational(1) / Rational(-2)) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZeroError);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZeroError);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
}

TEST_CASE("rational parsing and rendering") {
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("007") == Rational(7));
    CHECK(Rational::parse("4/2").str() == "2");
    CHECK(Rational::parse("-0").str() == "0");
    // Canonicality: equal values render identically.
    CHECK(Rational::parse("2/4").str() == Rational::parse("1/2").str());

    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("/2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("+5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1 /2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZeroError);
}

TEST_CASE("prime field arithmetic examples") {
    CHECK(Gfp(4, 7) * Gfp(5, 7) == Gfp(6, 7));
    CHECK(Gfp(3, 7).inverse() == Gfp(5, 7));
    CHECK(Gfp(1, 7).inverse() == Gfp(1, 7));
    CHECK(Gfp(2, 7) - Gfp(2, 7) == Gfp(0, 7));
    CHECK(-Gfp(0, 7) == Gfp(0, 7));
    CHECK(Gfp::from_int(-1, 7) == Gfp(6, 7));
    CHECK_THROWS_AS(Gfp(0, 7).inverse(), DivisionByZeroError);
    CHECK_THROWS_AS(Gfp(1, 7) + Gfp(1, 11), FieldMismatchError);
    CHECK_THROWS_AS((void)(Gfp(1, 7) == Gfp(1, 11)), FieldMismatchError);
}

TEST_CASE("prime field parsing") {
    CHECK(Gfp::parse("10", 7) == Gfp(3, 7));
    CHECK(Gfp::parse("1/3", 5) == Gfp(2, 5));
    CHECK(Gfp::parse("-1", 7) == Gfp(6, 7));
    CHECK(Gfp::parse("-6/4", 7) == Gfp(2, 7));
    // Literal longer than any machine word; residue checked with bignum tools.
    CHECK(Gfp::parse("123456789012345678901234567890", 7) == Gfp(0, 7));
    CHECK(Gfp::parse("123456789012345678901234567891", 7) == Gfp(1, 7));
    CHECK_THROWS_AS(Gfp::parse("1/7", 7), DivisionByZeroError);
    CHECK_THROWS_AS(Gfp::parse("x", 7), ParseError);
}

TEST_CASE("field axioms hold on sampled triples") {
    RationalField rational;
    PrimeField gf7(7), gf2(2);
    SplitMix64 rng(42);

    auto run = [&rng](const auto& field) {
        for (int i = 0; i < 200; ++i) {
            auto a = field.random_entry(rng);
            auto b = field.random_entry(rng);
            auto c = field.random_entry(rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == field.zero());
            CHECK(a - a == field.zero());
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == field.one());
                CHECK(a / a == field.one());
            }
        }
    };
    run(rational);
    run(gf7);
    run(gf2);
}

TEST_CASE("parse is a left inverse of render") {
    RationalField rational;
    PrimeField gf31(31);
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational q = rational.random_entry(rng);
        CHECK(rational.parse(q.str()) == q);
        Gfp g = gf31.random_entry(rng);
        CHECK(gf31.parse(g.str()) == g);
    }
}

TEST_CASE("field descriptors validate moduli") {
    CHECK(FieldDescriptor::parse("rational") == FieldDescriptor::rational());
    CHECK(FieldDescriptor::parse("gf:7") == FieldDescriptor::gf(7));
    CHECK(FieldDescriptor::gf(2).modulus == 2);
    CHECK(FieldDescriptor::gf(2147483647).modulus == 2147483647u); // 2^31 - 1 is prime
    CHECK(FieldDescriptor::gf(7).str() == "gf:7");
    CHECK(FieldDescriptor::rational().str() == "rational");

    CHECK_THROWS_AS(FieldDescriptor::gf(9), InvalidModulusError);
    CHECK_THROWS_AS(FieldDescriptor::gf(1), InvalidModulusError);
    CHECK_THROWS_AS(FieldDescriptor::gf(4294967291ULL), InvalidModulusError); // > 2^31
    CHECK_THROWS_AS(FieldDescriptor::parse("gf:"), ParseError);
    CHECK_THROWS_AS(FieldDescriptor::parse("gf:x"), ParseError);
    CHECK_THROWS_AS(FieldDescriptor::parse("real"), ParseError);
    CHECK_THROWS_AS(FieldDescriptor::parse("gf:15"), InvalidModulusError);
}

TEST_CASE("primality by trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7919));
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(7917));
}
