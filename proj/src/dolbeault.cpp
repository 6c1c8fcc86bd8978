#include "nilcoh/dolbeault.hpp"

#include <algorithm>

namespace nilcoh {

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        // advance in lexicographic order
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (k == 0) out = {{}};
    return out;
}

// Parity of sorting; 0 when a duplicate makes the wedge vanish.
int sort_sign(std::vector<std::size_t>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
            if (v[j - 1] == v[j]) return 0;
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

std::vector<std::size_t> ids_of(const Monomial& m, std::size_t n) {
    std::vector<std::size_t> ids = m.unbarred;
    for (auto j : m.barred) ids.push_back(n + j);
    return ids;
}

Monomial monomial_of(const std::vector<std::size_t>& sorted_ids, std::size_t n) {
    Monomial m;
    for (auto id : sorted_ids)
        (id < n ? m.unbarred : m.barred).push_back(id < n ? id : id - n);
    return m;
}

using TermMap = std::map<Monomial, Scalar>;

// d of a monomial via the graded Leibniz rule over the generator table.
TermMap d_monomial(const GeneratorDerivatives& gen, const Monomial& m) {
    const std::size_t n = gen.n;
    TermMap out;
    std::vector<std::size_t> ids = ids_of(m, n);
    for (std::size_t t = 0; t < ids.size(); ++t) {
        for (const auto& [ab, c] : gen.d[ids[t]]) {
            std::vector<std::size_t> seq;
            seq.reserve(ids.size() + 1);
            for (std::size_t u = 0; u < ids.size(); ++u) {
                if (u == t) {
                    seq.push_back(ab.first);
                    seq.push_back(ab.second);
                } else {
                    seq.push_back(ids[u]);
                }
            }
            int sg = sort_sign(seq);
            if (sg == 0) continue;
            Scalar coeff = c * Scalar(t % 2 == 0 ? sg : -sg);
            Monomial target = monomial_of(seq, n);
            auto it = out.find(target);
            if (it == out.end()) out.emplace(std::move(target), coeff);
            else {
                it->second += coeff;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

// Wedge of two coefficient maps, for the Leibniz spot-check.
TermMap wedge(const TermMap& a, const TermMap& b, std::size_t n) {
    TermMap out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::vector<std::size_t> seq = ids_of(ma, n);
            for (auto id : ids_of(mb, n)) seq.push_back(id);
            int sg = sort_sign(seq);
            if (sg == 0) continue;
            Monomial target = monomial_of(seq, n);
            Scalar coeff = ca * cb * Scalar(sg);
            out[target] += coeff;
            if (out[target].is_zero()) out.erase(target);
        }
    return out;
}

} // namespace

MonomialBasis::MonomialBasis(std::size_t n) : n_(n) {
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; q <= n; ++q) {
            std::vector<Monomial> list;
            for (const auto& i : combinations(n, p))
                for (const auto& j : combinations(n, q)) list.push_back(Monomial{i, j});
            auto& index = index_[{p, q}];
            for (std::size_t k = 0; k < list.size(); ++k) index[list[k]] = k;
            lists_[{p, q}] = std::move(list);
        }
}

const std::vector<Monomial>& MonomialBasis::monomials(std::size_t p, std::size_t q) const {
    auto it = lists_.find({p, q});
    if (it == lists_.end()) {
        static const std::vector<Monomial> empty;
        return empty;
    }
    return it->second;
}

std::size_t MonomialBasis::index_of(std::size_t p, std::size_t q, const Monomial& m) const {
    auto it = index_.find({p, q});
    if (it == index_.end()) fail_validation("index_of: bidegree out of range");
    auto jt = it->second.find(m);
    if (jt == it->second.end()) fail_validation("index_of: monomial not in basis");
    return jt->second;
}

void BigradedComplex::check_range(std::size_t p, std::size_t q) const {
    if (p > n() || q > n())
        fail_validation("bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                        ") out of range for n = " + std::to_string(n()));
}

BigradedComplex BigradedComplex::build(const ComplexStructure& J, const AdaptedBasis& basis) {
    J.require_integrable("build_complex");
    return build_from_generators(J.algebra(), basis.omegas, basis.field);
}

BigradedComplex BigradedComplex::build_from_generators(const LieAlgebra& g,
                                                       const ExactMatrix& omega_rows,
                                                       FieldTag field) {
    BigradedComplex c(g);
    c.field_ = field;
    c.gen_ = generator_derivatives(g, omega_rows, field);
    const std::size_t n = c.gen_.n;
    c.basis_ = MonomialBasis(n);

    // Integrability shape on generators: dω has no (0,2) part, dω̄ no (2,0).
    for (std::size_t id = 0; id < 2 * n; ++id)
        for (const auto& [ab, v] : c.gen_.d[id]) {
            auto bd = pair_bidegree(n, ab);
            if (id < n && bd.first == 0)
                fail_internal("build_complex: d omega_" + std::to_string(id + 1) +
                              " has a (0,2) component, contradicting integrability");
            if (id >= n && bd.second == 0)
                fail_internal("build_complex: d of a conjugate generator has a (2,0) component");
        }

    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; q <= n; ++q) {
            const auto& source = c.basis_.monomials(p, q);
            std::size_t rows_dbar = q + 1 <= n ? c.basis_.dim(p, q + 1) : 0;
            std::size_t rows_partial = p + 1 <= n ? c.basis_.dim(p + 1, q) : 0;
            ExactMatrix mb(rows_dbar, source.size(), field);
            ExactMatrix mp(rows_partial, source.size(), field);
            for (std::size_t col = 0; col < source.size(); ++col) {
                for (const auto& [target, coeff] : d_monomial(c.gen_, source[col])) {
                    std::size_t tp = target.unbarred.size(), tq = target.barred.size();
                    if (tp == p && tq == q + 1)
                        mb.set(c.basis_.index_of(tp, tq, target), col, coeff);
                    else if (tp == p + 1 && tq == q)
                        mp.set(c.basis_.index_of(tp, tq, target), col, coeff);
                    else
                        fail_internal("build_complex: d leaves the (p+1,q)+(p,q+1) window");
                }
            }
            c.dbar_[{p, q}] = std::move(mb);
            c.partial_[{p, q}] = std::move(mp);
        }

    // d² = 0 split by type: ∂̄∂̄ = 0, ∂∂ = 0, ∂∂̄ + ∂̄∂ = 0, in every bidegree.
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; q <= n; ++q) {
            if (q + 1 <= n && !(c.dbar(p, q + 1) * c.dbar(p, q)).is_zero())
                fail_internal("build_complex: dbar^2 != 0 at (" + std::to_string(p) + "," +
                              std::to_string(q) + ")");
            if (p + 1 <= n && !(c.partial(p + 1, q) * c.partial(p, q)).is_zero())
                fail_internal("build_complex: partial^2 != 0 at (" + std::to_string(p) + "," +
                              std::to_string(q) + ")");
            if (p + 1 <= n && q + 1 <= n &&
                !(c.partial(p, q + 1) * c.dbar(p, q) + c.dbar(p + 1, q) * c.partial(p, q))
                     .is_zero())
                fail_internal("build_complex: partial dbar + dbar partial != 0 at (" +
                              std::to_string(p) + "," + std::to_string(q) + ")");
        }
    return c;
}

const ExactMatrix& BigradedComplex::dbar(std::size_t p, std::size_t q) const {
    check_range(p, q);
    return dbar_.at({p, q});
}

const ExactMatrix& BigradedComplex::partial(std::size_t p, std::size_t q) const {
    check_range(p, q);
    return partial_.at({p, q});
}

std::size_t BigradedComplex::hodge_number(std::size_t p, std::size_t q) const {
    check_range(p, q);
    std::size_t ker = dim(p, q) - rank(dbar(p, q));
    std::size_t im = q == 0 ? 0 : rank(dbar(p, q - 1));
    return ker - im;
}

std::size_t BigradedComplex::hodge_number_partial(std::size_t p, std::size_t q) const {
    check_range(p, q);
    std::size_t ker = dim(p, q) - rank(partial(p, q));
    std::size_t im = p == 0 ? 0 : rank(partial(p - 1, q));
    return ker - im;
}

std::vector<std::vector<Scalar>> BigradedComplex::representatives(std::size_t p,
                                                                  std::size_t q) const {
    check_range(p, q);
    Subspace ker = kernel(dbar(p, q));
    Subspace im = q == 0 ? Subspace::zero(dim(p, q), field_)
                         : Subspace::from_rows(dbar(p, q - 1).transpose());
    std::vector<std::vector<Scalar>> reps;
    ExactMatrix stack = im.basis();
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        auto row = ker.basis().row(r);
        ExactMatrix cand = ExactMatrix::vstack(stack, ExactMatrix::from_rows({row}, field_));
        RrefResult rr = rref(cand);
        if (rr.rank > stack.rows()) {
            stack = rr.matrix;
            reps.push_back(row);
        }
    }
    return reps;
}

HodgeTable full_diamond(const BigradedComplex& c) {
    const std::size_t n = c.n();
    std::vector<std::vector<std::size_t>> grid(n + 1, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; q <= n; ++q) grid[p][q] = c.hodge_number(p, q);
    return assemble_diamond(c, std::move(grid));
}

HodgeTable assemble_diamond(const BigradedComplex& c, std::vector<std::vector<std::size_t>> grid) {
    const std::size_t n = c.n();
    HodgeTable t;
    t.n = n;
    t.h = std::move(grid);
    t.betti = chevalley_eilenberg_betti_all(c.algebra());

    if (t.h[0][0] != 1) fail_internal("full_diamond: h^{0,0} != 1");
    if (t.h[n][n] != 1) fail_internal("full_diamond: h^{n,n} != 1 (top class lost)");

    long euler = 0;
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; q <= n; ++q)
            euler += ((p + q) % 2 == 0 ? 1 : -1) * static_cast<long>(t.h[p][q]);
    t.euler_ok = euler == 0;

    t.frolicher_ok = true;
    for (std::size_t k = 0; k <= 2 * n; ++k) {
        std::size_t sum = 0;
        for (std::size_t p = 0; p <= n && p <= k; ++p)
            if (k - p <= n) sum += t.h[p][k - p];
        if (t.betti[k] > sum) t.frolicher_ok = false;
    }

    t.serre_ok = true;
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; q <= n; ++q)
            if (t.h[p][q] != t.h[n - p][n - q]) t.serre_ok = false;
    if (!t.serre_ok) fail_internal("full_diamond: Serre duality violated");
    return t;
}

bool conjugation_consistent(const BigradedComplex& c) {
    for (std::size_t p = 0; p <= c.n(); ++p)
        for (std::size_t q = 0; q <= c.n(); ++q)
            if (c.hodge_number(p, q) != c.hodge_number_partial(q, p)) return false;
    return true;
}

namespace {

// Real Chevalley–Eilenberg complex: d matrices per degree.
std::vector<ExactMatrix> ce_matrices(const LieAlgebra& g) {
    const std::size_t d = g.dim();
    std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>> dk(d);
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<Scalar> ek(d);
        ek[k] = Scalar(1);
        dk[k] = d_covector(g, ek);
    }
    std::vector<std::vector<std::vector<std::size_t>>> bases(d + 2);
    for (std::size_t deg = 0; deg <= d; ++deg) bases[deg] = combinations(d, deg);
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(d + 1);
    for (std::size_t deg = 0; deg <= d; ++deg)
        for (std::size_t i = 0; i < bases[deg].size(); ++i) index[deg][bases[deg][i]] = i;

    std::vector<ExactMatrix> out;
    for (std::size_t deg = 0; deg <= d; ++deg) {
        std::size_t target_dim = deg + 1 <= d ? bases[deg + 1].size() : 0;
        ExactMatrix m(target_dim, bases[deg].size(), FieldTag::Q);
        for (std::size_t col = 0; col < bases[deg].size(); ++col) {
            const auto& ids = bases[deg][col];
            for (std::size_t t = 0; t < ids.size(); ++t)
                for (const auto& [ij, c] : dk[ids[t]]) {
                    std::vector<std::size_t> seq;
                    for (std::size_t u = 0; u < ids.size(); ++u) {
                        if (u == t) {
                            seq.push_back(ij.first);
                            seq.push_back(ij.second);
                        } else {
                            seq.push_back(ids[u]);
                        }
                    }
                    int sg = sort_sign(seq);
                    if (sg == 0) continue;
                    std::size_t row = index[deg + 1][seq];
                    m.set(row, col, m.at(row, col) + c * Scalar(t % 2 == 0 ? sg : -sg));
                }
        }
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace

std::size_t chevalley_eilenberg_betti(const LieAlgebra& g, std::size_t k) {
    if (k > g.dim())
        fail_validation("betti: degree " + std::to_string(k) + " out of range");
    return chevalley_eilenberg_betti_all(g)[k];
}

std::vector<std::size_t> chevalley_eilenberg_betti_all(const LieAlgebra& g) {
    auto mats = ce_matrices(g);
    const std::size_t d = g.dim();
    std::vector<std::size_t> ranks(d + 1);
    for (std::size_t deg = 0; deg <= d; ++deg) ranks[deg] = rank(mats[deg]);
    std::vector<std::size_t> b(d + 1);
    for (std::size_t deg = 0; deg <= d; ++deg) {
        std::size_t ker = mats[deg].cols() - ranks[deg];
        std::size_t im = deg == 0 ? 0 : ranks[deg - 1];
        b[deg] = ker - im;
    }
    return b;
}

bool leibniz_check(const BigradedComplex& c, const Monomial& a, const Monomial& b) {
    const std::size_t n = c.n();
    TermMap ma{{a, Scalar(1)}}, mb{{b, Scalar(1)}};
    TermMap ab = wedge(ma, mb, n);
    // d(a∧b)
    TermMap lhs;
    for (const auto& [m, coeff] : ab)
        for (const auto& [t, v] : d_monomial(c.generators(), m)) {
            lhs[t] += coeff * v;
            if (lhs[t].is_zero()) lhs.erase(t);
        }
    // da∧b + (−1)^{deg a} a∧db
    TermMap da = d_monomial(c.generators(), a);
    TermMap db = d_monomial(c.generators(), b);
    TermMap rhs = wedge(da, mb, n);
    int sign = (a.unbarred.size() + a.barred.size()) % 2 == 0 ? 1 : -1;
    for (const auto& [t, v] : wedge(ma, db, n)) {
        rhs[t] += v * Scalar(sign);
        if (rhs[t].is_zero()) rhs.erase(t);
    }
    return lhs == rhs;
}

} // namespace nilcoh
