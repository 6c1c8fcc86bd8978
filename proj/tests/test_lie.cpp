#include <doctest.h>

#include "test_helpers.hpp"

using namespace nilcoh;
using helpers::catalog_structure;
using helpers::random_vector;

namespace {

LieAlgebra iwasawa() { return document_algebra(catalog_document("iwasawa")); }
LieAlgebra kodaira() { return document_algebra(catalog_document("kodaira-thurston")); }
LieAlgebra abelian(std::size_t dim) {
    return LieAlgebra::make(dim, {}, "abelian-" + std::to_string(dim));
}

std::vector<Scalar> e(std::size_t n, std::size_t i) {
    std::vector<Scalar> v(n);
    v[i] = Scalar(1);
    return v;
}

} // namespace

TEST_CASE("bracket from the iwasawa structure equations") {
    LieAlgebra g = iwasawa();
    // dα(X,Y) = −α([X,Y]) applied to de5 = e1∧e3 + e4∧e2, de6 = e1∧e4 + e2∧e3
    // gives [e1,e3] = −e5 (hand-solved 2x2 system).
    auto b = g.bracket(e(6, 0), e(6, 2));
    CHECK(b == std::vector<Scalar>{Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(-1),
                                   Scalar(0)});
    CHECK(g.bracket_basis(1, 3)[4] == Scalar(1));  // [e2,e4] = +e5
    CHECK(g.bracket_basis(0, 3)[5] == Scalar(-1)); // [e1,e4] = −e6
    CHECK(g.bracket_basis(1, 2)[5] == Scalar(-1)); // [e2,e3] = −e6

    // antisymmetry and x = y
    std::mt19937 rng(3);
    auto x = random_vector(rng, 6);
    CHECK(g.bracket(x, x) == std::vector<Scalar>(6));
    CHECK_THROWS_AS(g.bracket(x, random_vector(rng, 4)), Error);
}

TEST_CASE("bracket bilinearity on random vectors") {
    LieAlgebra g = iwasawa();
    std::mt19937 rng(67);
    for (int k = 0; k < 30; ++k) {
        auto x = random_vector(rng, 6), y = random_vector(rng, 6), z = random_vector(rng, 6);
        Scalar a = helpers::random_rational(rng), b = helpers::random_rational(rng);
        std::vector<Scalar> axby(6);
        for (std::size_t i = 0; i < 6; ++i) axby[i] = a * x[i] + b * y[i];
        auto lhs = g.bracket(axby, z);
        auto r1 = g.bracket(x, z), r2 = g.bracket(y, z);
        for (std::size_t i = 0; i < 6; ++i) CHECK(lhs[i] == a * r1[i] + b * r2[i]);
    }
}

TEST_CASE("jacobi validation") {
    // abelian is fine
    CHECK(abelian(4).is_abelian_algebra());

    // perturbing de5's first coefficient from 1 to 2 keeps Jacobi (the
    // bracket targets stay central)
    AlgebraDocument doc = catalog_document("iwasawa");
    doc.equations[0].terms[0].coeff = Scalar(2);
    CHECK_NOTHROW(document_algebra(doc));

    // adding [e1,e5] = e6 breaks it; first violating triple is (e1,e2,e4)
    LieAlgebra base = iwasawa();
    LieAlgebra::BracketTable table = base.brackets();
    std::vector<Scalar> v(6);
    v[5] = Scalar(1);
    table[{0, 4}] = v;
    auto viol = LieAlgebra::jacobi_violation(6, table);
    REQUIRE(viol.has_value());
    CHECK(viol->i == 0);
    CHECK(viol->j == 1);
    CHECK(viol->k == 3);
    CHECK_THROWS_WITH_AS(LieAlgebra::make(6, table, "bad"),
                         doctest::Contains("Jacobi identity fails on (e1,e2,e4)"), Error);
}

TEST_CASE("non-nilpotent input is rejected at construction") {
    // sl2-like relations scaled to stay integral: [e1,e2] = e2 makes the
    // series stabilize at span(e2) ≠ 0. Padded to dim 4 to stay even.
    LieAlgebra::BracketTable table;
    std::vector<Scalar> v(4);
    v[1] = Scalar(1);
    table[{0, 1}] = v;
    CHECK_THROWS_WITH_AS(LieAlgebra::make(4, table, "solv"),
                         doctest::Contains("not nilpotent"), Error);
}

TEST_CASE("lower central series") {
    LieAlgebra a4 = abelian(4);
    CHECK(a4.step() == 0);
    CHECK(a4.lower_central_series().terms.size() == 2);
    CHECK(a4.lower_central_series().terms[1].is_zero());

    LieAlgebra g = iwasawa();
    const auto& s = g.lower_central_series();
    CHECK(g.step() == 1);
    REQUIRE(s.terms.size() == 3);
    CHECK(s.terms[0].dim() == 6);
    CHECK(s.terms[1] == Subspace::span({e(6, 4), e(6, 5)}, 6, FieldTag::Q));
    CHECK(s.terms[2].is_zero());

    LieAlgebra kt = kodaira();
    CHECK(kt.step() == 1);
    CHECK(kt.lower_central_series().terms[1] ==
          Subspace::span({e(4, 2)}, 4, FieldTag::Q));
}

TEST_CASE("center") {
    CHECK(abelian(4).center().dim() == 4);
    CHECK(iwasawa().center() == Subspace::span({e(6, 4), e(6, 5)}, 6, FieldTag::Q));
    CHECK(kodaira().center() == Subspace::span({e(4, 2), e(4, 3)}, 4, FieldTag::Q));
}

TEST_CASE("rational subspaces") {
    LieAlgebra g = iwasawa();
    std::vector<Scalar> mixed{Scalar(1), Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    CHECK(g.is_rational_subspace(Subspace::span({mixed}, 6, FieldTag::Q)));

    std::vector<Scalar> irr(6);
    irr[0] = Scalar::sqrt2();
    irr[1] = Scalar(1);
    CHECK(!g.is_rational_subspace(Subspace::span({irr}, 6, FieldTag::QI_SQRT2)));

    for (const auto& term : g.lower_central_series().terms)
        CHECK(g.is_rational_subspace(term));
}

TEST_CASE("quotient algebra") {
    LieAlgebra g = iwasawa();

    auto [same, q0] = g.quotient(Subspace::zero(6, FieldTag::Q), "g/0");
    CHECK(same.dim() == 6);
    CHECK(same.brackets() == g.brackets());

    auto [zero, qf] = g.quotient(Subspace::full(6, FieldTag::Q), "g/g");
    CHECK(zero.dim() == 0);

    auto [ab, q1] = g.quotient(Subspace::span({e(6, 4), e(6, 5)}, 6, FieldTag::Q), "g/g1");
    CHECK(ab.dim() == 4);
    CHECK(ab.is_abelian_algebra());

    // span(e1) is not an ideal: [e1,e3] = −e5 escapes
    CHECK_THROWS_WITH_AS(g.quotient(Subspace::span({e(6, 0)}, 6, FieldTag::Q), "bad"),
                         doctest::Contains("not an ideal"), Error);
}

TEST_CASE("quotient by the commutator ideal is abelian for every catalog algebra") {
    for (const auto& name : catalog_names()) {
        LieAlgebra g = document_algebra(catalog_document(name));
        const auto& lcs = g.lower_central_series();
        auto [q, qm] = g.quotient(lcs.terms[1], g.name() + "/g1");
        CHECK(q.is_abelian_algebra());
    }
}

TEST_CASE("subalgebra restriction") {
    LieAlgebra g = iwasawa();
    // span(e1, e3, e5) is closed: [e1,e3] = −e5, others vanish — the
    // 3-dimensional Heisenberg algebra inside iwasawa
    Subspace h = Subspace::span({e(6, 0), e(6, 2), e(6, 4)}, 6, FieldTag::Q);
    auto [heis3, basis3] = g.subalgebra(h, "heis3");
    CHECK(heis3.dim() == 3);
    CHECK(heis3.step() == 1);

    Subspace h4 = Subspace::span({e(6, 0), e(6, 2), e(6, 4), e(6, 5)}, 6, FieldTag::Q);
    auto [sub, basis] = g.subalgebra(h4, "heis4");
    CHECK(sub.dim() == 4);
    CHECK(sub.step() == 1);

    // span(e1, e4) is not closed: [e1,e4] = −e6 escapes
    CHECK_THROWS_WITH_AS(g.subalgebra(Subspace::span({e(6, 0), e(6, 3)}, 6, FieldTag::Q), "x"),
                         doctest::Contains("not closed"), Error);
}

TEST_CASE("d_covector matches the sign convention") {
    LieAlgebra g = iwasawa();
    auto d5 = d_covector(g, e(6, 4));
    // de5 = e1∧e3 − e2∧e4
    CHECK(d5.size() == 2);
    CHECK(d5.at({0, 2}) == Scalar(1));
    CHECK(d5.at({1, 3}) == Scalar(-1));
}
