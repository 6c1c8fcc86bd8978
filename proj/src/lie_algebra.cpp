#include "nilcoh/lie_algebra.hpp"

#include <sstream>

namespace nilcoh {

namespace {

std::vector<Scalar> zero_vec(std::size_t n) { return std::vector<Scalar>(n); }

bool vec_is_zero(const std::vector<Scalar>& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

std::vector<Scalar> table_bracket(const LieAlgebra::BracketTable& t, std::size_t dim,
                                  std::size_t i, std::size_t j) {
    if (i == j) return zero_vec(dim);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = t.find({i, j});
    if (it == t.end()) return zero_vec(dim);
    auto v = it->second;
    if (flip)
        for (auto& s : v) s = -s;
    return v;
}

} // namespace

std::optional<JacobiViolation> LieAlgebra::jacobi_violation(std::size_t dim,
                                                            const BracketTable& brackets) {
    auto br = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
        std::vector<Scalar> out(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j) {
                Scalar c = x[i] * y[j] - x[j] * y[i];
                if (c.is_zero()) continue;
                auto it = brackets.find({i, j});
                if (it == brackets.end()) continue;
                for (std::size_t k = 0; k < dim; ++k)
                    if (!it->second[k].is_zero()) out[k] += c * it->second[k];
            }
        return out;
    };
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t k = j + 1; k < dim; ++k) {
                auto eij = table_bracket(brackets, dim, i, j);
                auto ejk = table_bracket(brackets, dim, j, k);
                auto eki = table_bracket(brackets, dim, k, i);
                std::vector<Scalar> ek(dim), ei(dim), ej(dim);
                ek[k] = Scalar(1);
                ei[i] = Scalar(1);
                ej[j] = Scalar(1);
                auto sum = br(eij, ek);
                auto t2 = br(ejk, ei);
                auto t3 = br(eki, ej);
                for (std::size_t m = 0; m < dim; ++m) sum[m] += t2[m] + t3[m];
                if (!vec_is_zero(sum)) return JacobiViolation{i, j, k, sum};
            }
    return std::nullopt;
}

LieAlgebra LieAlgebra::make(std::size_t dim, BracketTable brackets, std::string name) {
    for (const auto& [ij, v] : brackets) {
        if (ij.first >= ij.second || ij.second >= dim)
            fail_validation("'" + name + "': bracket indices out of range or not i<j");
        if (v.size() != dim) fail_validation("'" + name + "': bracket vector length mismatch");
        for (const auto& s : v)
            if (!s.is_rational())
                fail_validation("'" + name + "': structure constants must be rational");
    }
    // Drop zero brackets so is_abelian_algebra() can test emptiness.
    for (auto it = brackets.begin(); it != brackets.end();)
        it = vec_is_zero(it->second) ? brackets.erase(it) : std::next(it);

    if (auto viol = jacobi_violation(dim, brackets)) {
        std::ostringstream os;
        os << "'" << name << "': Jacobi identity fails on (e" << viol->i + 1 << ",e" << viol->j + 1
           << ",e" << viol->k + 1 << ")";
        fail_validation(os.str());
    }

    LieAlgebra g;
    g.dim_ = dim;
    g.name_ = std::move(name);
    g.brackets_ = std::move(brackets);

    // Series (D); stabilizing at a nonzero subspace means not nilpotent.
    DescendingSeries series;
    series.terms.push_back(Subspace::full(dim, FieldTag::Q));
    while (!series.terms.back().is_zero()) {
        const Subspace& prev = series.terms.back();
        std::vector<std::vector<Scalar>> rows;
        for (std::size_t r = 0; r < prev.dim(); ++r) {
            auto x = prev.basis().row(r);
            for (std::size_t j = 0; j < dim; ++j) {
                std::vector<Scalar> ej(dim);
                ej[j] = Scalar(1);
                auto b = g.bracket(x, ej);
                if (!vec_is_zero(b)) rows.push_back(std::move(b));
            }
        }
        Subspace next = Subspace::span(rows, dim, FieldTag::Q);
        if (!next.is_zero() && next.dim() >= prev.dim())
            fail_validation("'" + g.name_ + "': lower central series stabilizes at dimension " +
                            std::to_string(next.dim()) + "; algebra is not nilpotent");
        series.terms.push_back(std::move(next));
    }
    series.step = series.terms.size() >= 2 ? series.terms.size() - 2 : 0;
    g.series_ = std::move(series);
    return g;
}

std::vector<Scalar> LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) fail_validation("bracket_basis: index out of range");
    return table_bracket(brackets_, dim_, i, j);
}

std::vector<Scalar> LieAlgebra::bracket(const std::vector<Scalar>& x,
                                        const std::vector<Scalar>& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        fail_validation("bracket: vector dimension mismatch");
    std::vector<Scalar> out(dim_);
    for (const auto& [ij, v] : brackets_) {
        auto [i, j] = ij;
        Scalar c = x[i] * y[j] - x[j] * y[i];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < dim_; ++k)
            if (!v[k].is_zero()) out[k] += c * v[k];
    }
    return out;
}

Subspace LieAlgebra::center() const {
    // Stack the maps x ↦ [x, e_j]; the center is the joint kernel.
    ExactMatrix m(dim_ * dim_, dim_, FieldTag::Q);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t i = 0; i < dim_; ++i) {
            auto v = bracket_basis(i, j);
            for (std::size_t k = 0; k < dim_; ++k)
                if (!v[k].is_zero()) m.set(j * dim_ + k, i, v[k]);
        }
    Subspace z = kernel(m);
    const auto& last = series_.terms[series_.step];
    if (!subspace_ops(z, last).contains)
        fail_internal("center does not contain the last nonzero central-series term");
    return z;
}

bool LieAlgebra::is_rational_subspace(const Subspace& h) const {
    if (h.ambient() != dim_) fail_validation("is_rational_subspace: ambient mismatch");
    for (const auto& [rc, v] : h.basis().entries())
        if (!v.is_rational()) return false;
    return true;
}

std::pair<LieAlgebra, QuotientMap> LieAlgebra::quotient(const Subspace& ideal,
                                                        const std::string& name) const {
    if (ideal.ambient() != dim_) fail_validation("quotient: ambient mismatch");
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
        auto v = ideal.basis().row(r);
        for (std::size_t j = 0; j < dim_; ++j) {
            std::vector<Scalar> ej(dim_);
            ej[j] = Scalar(1);
            if (!ideal.contains(bracket(ej, v)))
                fail_validation("quotient: not an ideal; [e" + std::to_string(j + 1) +
                                ", basis row " + std::to_string(r + 1) + "] escapes");
        }
    }
    QuotientMap q = quotient_coordinates(dim_, ideal);
    BracketTable table;
    for (std::size_t a = 0; a < q.qdim; ++a)
        for (std::size_t b = a + 1; b < q.qdim; ++b) {
            std::vector<Scalar> sa(dim_), sb(dim_);
            for (std::size_t r = 0; r < dim_; ++r) {
                sa[r] = q.section.at(r, a);
                sb[r] = q.section.at(r, b);
            }
            auto v = mat_vec(q.projection, bracket(sa, sb));
            if (!vec_is_zero(v)) table[{a, b}] = std::move(v);
        }
    return {LieAlgebra::make(q.qdim, std::move(table), name), std::move(q)};
}

std::pair<LieAlgebra, ExactMatrix> LieAlgebra::subalgebra(const Subspace& sub,
                                                          const std::string& name) const {
    if (sub.ambient() != dim_) fail_validation("subalgebra: ambient mismatch");
    const ExactMatrix& h = sub.basis();
    const std::size_t k = sub.dim();
    BracketTable table;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            auto v = bracket(h.row(a), h.row(b));
            auto coords = solve_row_combination(h, v);
            if (!coords)
                fail_validation("subalgebra: not closed under the bracket (rows " +
                                std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
            if (!vec_is_zero(*coords)) table[{a, b}] = std::move(*coords);
        }
    return {LieAlgebra::make(k, std::move(table), name), h};
}

std::map<std::pair<std::size_t, std::size_t>, Scalar> d_covector(const LieAlgebra& g,
                                                                 const std::vector<Scalar>& alpha) {
    if (alpha.size() != g.dim()) fail_validation("d_covector: length mismatch");
    std::map<std::pair<std::size_t, std::size_t>, Scalar> out;
    for (const auto& [ij, v] : g.brackets()) {
        Scalar c;
        for (std::size_t k = 0; k < g.dim(); ++k)
            if (!v[k].is_zero() && !alpha[k].is_zero()) c += alpha[k] * v[k];
        if (!c.is_zero()) out[ij] = -c;
    }
    return out;
}

} // namespace nilcoh
