#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilcoh/error.hpp"

namespace nilcoh {

using Integer = boost::multiprecision::cpp_int;
// Canonical lowest terms, positive denominator; both maintained by boost.
using Rational = boost::multiprecision::cpp_rational;

// The three exact coefficient fields: Q ⊂ Q(i) ⊂ Q(i,√2).
enum class FieldTag { Q, QI, QI_SQRT2 };

FieldTag join(FieldTag a, FieldTag b);
bool subfield_of(FieldTag a, FieldTag b);
std::string field_name(FieldTag f);

// Element of Q(i,√2) as a vector over the Q-basis {1, i, √2, i√2}.
// Values whose upper components vanish live in the smaller fields; field()
// reports the minimal field containing the value. All arithmetic is exact
// and results are always canonical (componentwise lowest terms), so
// equality is plain componentwise comparison.
class Scalar {
public:
    Scalar() : c_{} {}
    Scalar(long n) : c_{Rational(n), Rational(), Rational(), Rational()} {}
    explicit Scalar(const Rational& r) : c_{r, Rational(), Rational(), Rational()} {}
    Scalar(const Rational& re, const Rational& im)
        : c_{re, im, Rational(), Rational()} {}

    static Scalar i() { return component(1); }
    static Scalar sqrt2() { return component(2); }
    static Scalar i_sqrt2() { return component(3); }

    const Rational& coeff(std::size_t k) const { return c_[k]; }

    bool is_zero() const;
    bool is_rational() const;  // in Q
    bool is_gaussian() const;  // in Q(i)
    bool is_real() const;      // i and i√2 components vanish
    FieldTag field() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws on division by zero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar conj() const;    // complex conjugation: i ↦ −i, √2 fixed
    Scalar inverse() const; // throws on zero

    bool operator==(const Scalar& o) const { return c_ == o.c_; }
    bool operator!=(const Scalar& o) const { return c_ != o.c_; }

    // Total bit size of all numerators and denominators; the pivot-selection
    // weight during elimination (small pivots bound coefficient blowup).
    std::size_t digit_size() const;

    // Textual grammar: `a/b`, `a/b+c/d*i`, `a/b+c/d*i+e/f*s2+g/h*i*s2`,
    // integer shorthand `a`, `-` allowed on any component. str() emits the
    // canonical form (zero components dropped, `0` for zero, explicit
    // coefficients on symbols); parse() accepts the full grammar and
    // round-trips str() exactly.
    std::string str() const;
    static Scalar parse(const std::string& text);

private:
    static Scalar component(std::size_t k) {
        Scalar s;
        s.c_[k] = 1;
        return s;
    }
    std::array<Rational, 4> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace nilcoh
