#pragma once

// Brute-force oracle, deliberately independent of the engine: its own
// Gaussian-rational arithmetic, bitmask monomials and dense first-nonzero
// pivot elimination. Generator differentials are hard-coded from the
// structure equations of each example, not derived through the engine.

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rat = boost::multiprecision::cpp_rational;

struct QI {
    Rat re, im;
    QI() = default;
    QI(long r) : re(r) {}
    QI(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    QI operator+(const QI& o) const { return {re + o.re, im + o.im}; }
    QI operator-(const QI& o) const { return {re - o.re, im - o.im}; }
    QI operator*(const QI& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    QI operator/(const QI& o) const {
        Rat n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    bool is_zero() const { return re == 0 && im == 0; }
    bool operator==(const QI& o) const { return re == o.re && im == o.im; }
};

using Mask = std::uint32_t;
// dσ_id = Σ coeff · σ_a ∧ σ_b, keyed (a,b) with a < b over 2n generator ids
// (0…n−1 holomorphic, n…2n−1 antiholomorphic).
using GenDiff = std::map<std::pair<int, int>, QI>;

struct Algebra {
    int n = 0;                    // complex dimension
    std::vector<GenDiff> d;       // size 2n
};

// Dense rank over Q(i), first-nonzero pivots.
std::size_t dense_rank(std::vector<std::vector<QI>> m);

// h^{p,q} of (Λ^{*,*}, ∂̄) for the given generator differentials.
std::size_t hodge(const Algebra& a, int p, int q);

// Betti numbers of a real exterior complex with hard-coded de^k (same
// machinery, purely real coefficients, 'dim' generators).
struct RealAlgebra {
    int dim = 0;
    std::vector<GenDiff> d; // size dim, ids 0…dim−1
};
std::vector<std::size_t> betti(const RealAlgebra& a);

// The examples, written down from their structure equations.
Algebra iwasawa();          // dω3 = ω1∧ω2 (conjugate relation on the bar side)
Algebra kodaira_thurston(); // dω2 = (i/2)·ω1∧ω̄1
Algebra torus(int n);       // all differentials zero
Algebra three_step();       // dω2 = ω1∧ω̄1, dω3 = ω1∧ω2
RealAlgebra iwasawa_real(); // de5 = e1∧e3 + e4∧e2, de6 = e1∧e4 + e2∧e3
RealAlgebra kodaira_thurston_real(); // de3 = e1∧e2

} // namespace oracle
