#include <doctest.h>

#include <random>

#include "nilcoh/scalar.hpp"

using namespace nilcoh;

namespace {

Scalar random_scalar(std::mt19937& rng, bool full_field) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    Scalar s(Rational(num(rng), den(rng)));
    s += Scalar::i() * Scalar(Rational(num(rng), den(rng)));
    if (full_field) {
        s += Scalar::sqrt2() * Scalar(Rational(num(rng), den(rng)));
        s += Scalar::i_sqrt2() * Scalar(Rational(num(rng), den(rng)));
    }
    return s;
}

} // namespace

TEST_CASE("scalar basis products") {
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
    CHECK(Scalar::i_sqrt2() * Scalar::i_sqrt2() == Scalar(-2));
    CHECK(Scalar::i() * Scalar::sqrt2() == Scalar::i_sqrt2());
    CHECK(Scalar::sqrt2() * Scalar::i_sqrt2() == Scalar(2) * Scalar::i());
    CHECK(Scalar::i() * Scalar::i_sqrt2() == -Scalar::sqrt2());
}

TEST_CASE("field tags and predicates") {
    CHECK(Scalar(3).field() == FieldTag::Q);
    CHECK((Scalar(1) + Scalar::i()).field() == FieldTag::QI);
    CHECK(Scalar::sqrt2().field() == FieldTag::QI_SQRT2);
    CHECK(Scalar::sqrt2().is_real());
    CHECK(!Scalar::i_sqrt2().is_real());
    CHECK(Scalar(5).is_rational());
    CHECK(!Scalar::i().is_rational());
    CHECK(join(FieldTag::Q, FieldTag::QI) == FieldTag::QI);
    CHECK(subfield_of(FieldTag::QI, FieldTag::QI_SQRT2));
    CHECK(!subfield_of(FieldTag::QI_SQRT2, FieldTag::QI));
}

TEST_CASE("every nonzero scalar has an exact inverse") {
    std::mt19937 rng(7);
    int checked = 0;
    while (checked < 200) {
        Scalar s = random_scalar(rng, checked % 2 == 0);
        if (s.is_zero()) continue;
        CHECK(s * s.inverse() == Scalar(1));
        ++checked;
    }
    CHECK_THROWS_AS(Scalar().inverse(), Error);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(11);
    for (int k = 0; k < 100; ++k) {
        Scalar a = random_scalar(rng, true);
        Scalar b = random_scalar(rng, true);
        Scalar c = random_scalar(rng, true);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK((a.conj() * b.conj()) == (a * b).conj());
    }
}

TEST_CASE("canonical printing") {
    CHECK(Scalar().str() == "0");
    CHECK(Scalar(-3).str() == "-3");
    CHECK(Scalar(Rational(1, 2)).str() == "1/2");
    CHECK((Scalar(1) + Scalar::i()).str() == "1+1*i");
    CHECK((Scalar(1) - Scalar::i() * Scalar(Rational(1, 2))).str() == "1-1/2*i");
    Scalar full = Scalar(Rational(2, 3)) + Scalar::i() * Scalar(-1) + Scalar::sqrt2() * Scalar(2) +
                  Scalar::i_sqrt2() * Scalar(Rational(-5, 7));
    CHECK(full.str() == "2/3-1*i+2*s2-5/7*i*s2");
}

TEST_CASE("parse accepts the grammar and round-trips printing") {
    CHECK(Scalar::parse("7") == Scalar(7));
    CHECK(Scalar::parse("7/2") == Scalar(Rational(7, 2)));
    CHECK(Scalar::parse("-7/2") == Scalar(Rational(-7, 2)));
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("s2") == Scalar::sqrt2());
    CHECK(Scalar::parse("i*s2") == Scalar::i_sqrt2());
    CHECK(Scalar::parse("1+1*i") == Scalar(1) + Scalar::i());
    CHECK(Scalar::parse("1/2*s2") == Scalar::sqrt2() * Scalar(Rational(1, 2)));
    CHECK(Scalar::parse("2/4") == Scalar(Rational(1, 2))); // canonicalized
    // terms in any order
    CHECK(Scalar::parse("1*i+2") == Scalar(2) + Scalar::i());

    std::mt19937 rng(23);
    for (int k = 0; k < 200; ++k) {
        Scalar s = random_scalar(rng, k % 2 == 0);
        CHECK(Scalar::parse(s.str()) == s);
    }
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(Scalar::parse(""), Error);
    CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
    CHECK_THROWS_AS(Scalar::parse("1+1"), Error);     // duplicate component
    CHECK_THROWS_AS(Scalar::parse("i+2*i"), Error);   // duplicate component
    CHECK_THROWS_AS(Scalar::parse("1++2*i"), Error);
    CHECK_THROWS_AS(Scalar::parse("x"), Error);
    CHECK_THROWS_AS(Scalar::parse("1*"), Error);
    CHECK_THROWS_AS(Scalar::parse("1 + i"), Error); // whitespace is not part of the grammar
    CHECK_THROWS_AS(Scalar::parse("s3"), Error);
}
