#include <doctest.h>

#include "test_helpers.hpp"

using namespace nilcoh;
using helpers::random_matrix;

TEST_CASE("rref drops proportional rows") {
    ExactMatrix m = ExactMatrix::from_rows({{Scalar(2), Scalar(4)}, {Scalar(1), Scalar(2)}},
                                           FieldTag::Q);
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.matrix == ExactMatrix::from_rows({{Scalar(1), Scalar(2)}}, FieldTag::Q));
}

TEST_CASE("rref over Q(i): row2 = -i row1") {
    ExactMatrix m = ExactMatrix::from_rows(
        {{Scalar::i(), Scalar(1)}, {Scalar(1), -Scalar::i()}}, FieldTag::QI);
    CHECK(rref(m).rank == 1);
    CHECK(rank(m) == 1);
}

TEST_CASE("zero matrix has empty rref") {
    ExactMatrix m(3, 3, FieldTag::Q);
    RrefResult r = rref(m);
    CHECK(r.rank == 0);
    CHECK(r.matrix.rows() == 0);
}

TEST_CASE("rref is idempotent and canonical on random matrices") {
    std::mt19937 rng(31);
    for (int k = 0; k < 60; ++k) {
        ExactMatrix m = random_matrix(rng, 4, 5);
        RrefResult r1 = rref(m);
        CHECK(rref(r1.matrix).matrix == r1.matrix);

        // Row-equivalent matrix: random invertible row mix.
        ExactMatrix p = random_matrix(rng, 4, 4);
        try {
            inverse(p);
        } catch (const Error&) {
            continue;
        }
        CHECK(rref(p * m).matrix == r1.matrix);
    }
}

TEST_CASE("bareiss rank agrees with rref rank") {
    std::mt19937 rng(37);
    for (int k = 0; k < 80; ++k) {
        std::uniform_int_distribution<std::size_t> dims(1, 6);
        ExactMatrix m = random_matrix(rng, dims(rng), dims(rng));
        CHECK(rank(m) == rref(m).rank);
    }
}

TEST_CASE("rank is stable under field widening") {
    std::mt19937 rng(41);
    for (int k = 0; k < 30; ++k) {
        ExactMatrix m = random_matrix(rng, 4, 4);
        std::size_t r = rref(m).rank;
        CHECK(rref(m.widened(FieldTag::QI)).rank == r);
        CHECK(rref(m.widened(FieldTag::QI_SQRT2)).rank == r);
        CHECK(rank(m.widened(FieldTag::QI_SQRT2)) == r);
    }
}

TEST_CASE("matrix field mismatch is an error") {
    ExactMatrix m(2, 2, FieldTag::Q);
    CHECK_THROWS_AS(m.set(0, 0, Scalar::i()), Error);
    ExactMatrix mi(2, 2, FieldTag::QI);
    mi.set(0, 0, Scalar::i()); // fine
    CHECK_THROWS_AS(mi.set(0, 1, Scalar::sqrt2()), Error);
}

TEST_CASE("inverse round-trips") {
    std::mt19937 rng(43);
    int done = 0;
    while (done < 20) {
        ExactMatrix m = random_matrix(rng, 4, 4);
        ExactMatrix mi(4, 4, FieldTag::Q);
        try {
            mi = inverse(m);
        } catch (const Error&) {
            continue;
        }
        CHECK(m * mi == ExactMatrix::identity(4, FieldTag::Q));
        ++done;
    }
    ExactMatrix sing = ExactMatrix::from_rows({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}},
                                              FieldTag::Q);
    CHECK_THROWS_AS(inverse(sing), Error);
}
