#include "nilcoh/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace nilcoh {

FieldTag join(FieldTag a, FieldTag b) { return a < b ? b : a; }

bool subfield_of(FieldTag a, FieldTag b) { return a <= b; }

std::string field_name(FieldTag f) {
    switch (f) {
    case FieldTag::Q: return "Q";
    case FieldTag::QI: return "Q(i)";
    case FieldTag::QI_SQRT2: return "Q(i,s2)";
    }
    return "?";
}

bool Scalar::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Scalar::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

bool Scalar::is_gaussian() const { return c_[2] == 0 && c_[3] == 0; }

bool Scalar::is_real() const { return c_[1] == 0 && c_[3] == 0; }

FieldTag Scalar::field() const {
    if (c_[2] != 0 || c_[3] != 0) return FieldTag::QI_SQRT2;
    if (c_[1] != 0) return FieldTag::QI;
    return FieldTag::Q;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (std::size_t k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r;
    for (std::size_t k = 0; k < 4; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r;
    for (std::size_t k = 0; k < 4; ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

// Basis products: i·i = −1, √2·√2 = 2, i√2·i√2 = −2, i·√2 = i√2,
// i·i√2 = −√2, √2·i√2 = 2i.
Scalar Scalar::operator*(const Scalar& o) const {
    const auto& a = c_;
    const auto& b = o.c_;
    Scalar r;
    r.c_[0] = a[0] * b[0] - a[1] * b[1] + 2 * a[2] * b[2] - 2 * a[3] * b[3];
    r.c_[1] = a[0] * b[1] + a[1] * b[0] + 2 * a[2] * b[3] + 2 * a[3] * b[2];
    r.c_[2] = a[0] * b[2] + a[2] * b[0] - a[1] * b[3] - a[3] * b[1];
    r.c_[3] = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
    return r;
}

Scalar Scalar::conj() const {
    Scalar r = *this;
    r.c_[1] = -r.c_[1];
    r.c_[3] = -r.c_[3];
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail_validation("scalar inverse of zero");
    // Write z = x + y√2 with x, y ∈ Q(i). Then 1/z = (x − y√2) / (x² − 2y²)
    // and x² − 2y² ∈ Q(i) is nonzero because √2 ∉ Q(i).
    Scalar x(c_[0], c_[1]);
    Scalar y(c_[2], c_[3]);
    Scalar d = x * x - Scalar(2) * y * y; // Gaussian
    // Gaussian inverse: 1/d = conj(d)/|d|².
    Rational norm = d.c_[0] * d.c_[0] + d.c_[1] * d.c_[1];
    Scalar dinv(d.c_[0] / norm, -d.c_[1] / norm);
    Scalar num = x - Scalar::sqrt2() * y;
    return num * dinv;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

namespace {

std::size_t bits(const Integer& v) {
    if (v == 0) return 1;
    return static_cast<std::size_t>(msb(v < 0 ? Integer(-v) : v)) + 1;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

} // namespace

std::size_t Scalar::digit_size() const {
    std::size_t n = 0;
    for (const auto& c : c_) n += bits(numerator(c)) + bits(denominator(c));
    return n;
}

std::string Scalar::str() const {
    static const char* suffix[4] = {"", "*i", "*s2", "*i*s2"};
    std::string out;
    for (std::size_t k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        std::string term = rational_str(c_[k]) + suffix[k];
        if (!out.empty() && term[0] != '-') out += '+';
        out += term;
    }
    if (out.empty()) out = "0";
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    bool eat(char c) {
        if (!done() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

[[noreturn]] void parse_fail(const Cursor& c, const std::string& why) {
    fail_validation("scalar parse error at position " + std::to_string(c.pos) + " in '" + c.s +
                    "': " + why);
}

Integer parse_integer(Cursor& c) {
    std::size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == start) parse_fail(c, "expected digits");
    return Integer(c.s.substr(start, c.pos - start));
}

Rational parse_rational(Cursor& c) {
    Integer num = parse_integer(c);
    if (c.eat('/')) {
        Integer den = parse_integer(c);
        if (den == 0) parse_fail(c, "zero denominator");
        return Rational(num) / Rational(den);
    }
    return Rational(num);
}

// One additive term: optional coefficient, optional symbol; returns the
// component index (0..3) and the signed coefficient.
std::pair<std::size_t, Rational> parse_term(Cursor& c, bool negative) {
    Rational coeff = 1;
    bool have_coeff = false;
    if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = parse_rational(c);
        have_coeff = true;
    }
    std::size_t comp = 0;
    bool have_sym = false;
    if ((!have_coeff) || c.eat('*')) {
        if (c.eat('i')) {
            comp = 1;
            have_sym = true;
            if (c.eat('*')) {
                if (c.eat('s') && c.eat('2')) comp = 3;
                else parse_fail(c, "expected s2 after i*");
            }
        } else if (c.eat('s')) {
            if (!c.eat('2')) parse_fail(c, "expected s2");
            comp = 2;
            have_sym = true;
        } else if (!have_coeff) {
            parse_fail(c, "expected number or symbol");
        } else {
            parse_fail(c, "expected symbol after *");
        }
    }
    (void)have_sym;
    if (negative) coeff = -coeff;
    return {comp, coeff};
}

} // namespace

Scalar Scalar::parse(const std::string& text) {
    Cursor c{text};
    if (c.done()) parse_fail(c, "empty scalar");
    std::array<Rational, 4> comps{};
    std::array<bool, 4> seen{};
    bool first = true;
    while (!c.done()) {
        bool neg = false;
        if (c.eat('-')) neg = true;
        else if (c.eat('+')) {
            if (first) parse_fail(c, "leading +");
        } else if (!first) {
            parse_fail(c, "expected + or - between terms");
        }
        auto [comp, coeff] = parse_term(c, neg);
        if (seen[comp]) parse_fail(c, "duplicate component");
        seen[comp] = true;
        comps[comp] = coeff;
        first = false;
    }
    Scalar out;
    out.c_ = comps;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace nilcoh
