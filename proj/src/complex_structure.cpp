#include "nilcoh/complex_structure.hpp"

#include <sstream>

namespace nilcoh {

namespace {

bool vec_is_zero(const std::vector<Scalar>& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

std::vector<Scalar> basis_vec(std::size_t dim, std::size_t i) {
    std::vector<Scalar> v(dim);
    v[i] = Scalar(1);
    return v;
}

std::size_t pair_index(std::size_t dim, std::size_t i, std::size_t j) {
    // position of (i,j), i<j, in lexicographic order over C(dim,2)
    return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

} // namespace

ComplexStructure ComplexStructure::make(LieAlgebra g, ExactMatrix j, std::string name) {
    const std::size_t d = g.dim();
    if (j.rows() != d || j.cols() != d)
        fail_validation("'" + name + "': J must be " + std::to_string(d) + "x" +
                        std::to_string(d));
    for (const auto& [rc, v] : j.entries())
        if (!v.is_real())
            fail_validation("'" + name + "': J must be a real endomorphism (entry (" +
                            std::to_string(rc.first + 1) + "," + std::to_string(rc.second + 1) +
                            ") has an imaginary part)");
    ExactMatrix sq = j * j;
    if (sq != ExactMatrix::identity(d, sq.field()).scaled(Scalar(-1)))
        fail_validation("'" + name + "': J^2 != -Id");
    return ComplexStructure(std::move(g), std::move(j), std::move(name));
}

std::vector<Scalar> ComplexStructure::apply_j(const std::vector<Scalar>& x) const {
    return mat_vec(j_, x);
}

std::vector<Scalar> ComplexStructure::nijenhuis(const std::vector<Scalar>& x,
                                                const std::vector<Scalar>& y) const {
    const LieAlgebra& g = algebra_;
    auto jx = apply_j(x), jy = apply_j(y);
    auto t1 = g.bracket(x, y);
    auto t2 = apply_j(g.bracket(jx, y));
    auto t3 = apply_j(g.bracket(x, jy));
    auto t4 = g.bracket(jx, jy);
    std::vector<Scalar> out(g.dim());
    for (std::size_t k = 0; k < g.dim(); ++k) out[k] = t1[k] + t2[k] + t3[k] - t4[k];
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> ComplexStructure::first_nonintegrable_pair()
    const {
    const std::size_t d = algebra_.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (!vec_is_zero(nijenhuis(basis_vec(d, i), basis_vec(d, j)))) return {{i, j}};
    return std::nullopt;
}

bool ComplexStructure::is_rational() const {
    for (const auto& [rc, v] : j_.entries())
        if (!v.is_rational()) return false;
    return true;
}

bool ComplexStructure::is_abelian() const {
    const std::size_t d = algebra_.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            auto lhs = algebra_.bracket(apply_j(basis_vec(d, i)), apply_j(basis_vec(d, j)));
            auto rhs = algebra_.bracket_basis(i, j);
            for (std::size_t k = 0; k < d; ++k)
                if (lhs[k] != rhs[k]) return false;
        }
    return true;
}

bool ComplexStructure::is_parallelizable() const {
    const std::size_t d = algebra_.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto lhs = algebra_.bracket(apply_j(basis_vec(d, i)), basis_vec(d, j));
            auto rhs = apply_j(algebra_.bracket_basis(i, j));
            for (std::size_t k = 0; k < d; ++k)
                if (lhs[k] != rhs[k]) return false;
        }
    return true;
}

void ComplexStructure::require_integrable(const std::string& op) const {
    if (auto p = first_nonintegrable_pair()) {
        std::ostringstream os;
        os << op << ": '" << name_ << "' is not integrable; N(e" << p->first + 1 << ",e"
           << p->second + 1 << ") != 0";
        fail_validation(os.str());
    }
}

JSeries j_series(const ComplexStructure& J) {
    J.require_integrable("j_series");
    const LieAlgebra& g = J.algebra();
    const FieldTag f = join(FieldTag::Q, J.matrix().field());
    const auto& lcs = g.lower_central_series();

    JSeries out;
    for (const auto& gi : lcs.terms) {
        std::vector<std::vector<Scalar>> rows;
        for (std::size_t r = 0; r < gi.dim(); ++r) {
            rows.push_back(gi.basis().row(r));
            rows.push_back(J.apply_j(gi.basis().row(r)));
        }
        out.terms.push_back(Subspace::span(rows, g.dim(), f));
    }

    // Recompute the proved facts about the series; a failure here is a
    // bug in the bracket/subspace substrate, not a property of the input.
    const std::size_t d = g.dim();
    for (std::size_t i = 1; i < out.terms.size(); ++i) {
        const Subspace& big = out.terms[i - 1];
        const Subspace& small = out.terms[i];
        JSeriesStep step;
        step.is_ideal = true;
        step.quotient_abelian = true;
        for (std::size_t a = 0; a < big.dim() && step.is_ideal; ++a)
            for (std::size_t b = 0; b < small.dim(); ++b)
                if (!small.contains(g.bracket(big.basis().row(a), small.basis().row(b)))) {
                    step.is_ideal = false;
                    break;
                }
        for (std::size_t a = 0; a < big.dim() && step.quotient_abelian; ++a)
            for (std::size_t b = a + 1; b < big.dim(); ++b)
                if (!small.contains(g.bracket(big.basis().row(a), big.basis().row(b)))) {
                    step.quotient_abelian = false;
                    break;
                }
        if (!step.is_ideal)
            fail_internal("j_series: g^" + std::to_string(i) + "_J is not an ideal of g^" +
                          std::to_string(i - 1) + "_J");
        if (!step.quotient_abelian)
            fail_internal("j_series: quotient at step " + std::to_string(i) + " is not abelian");
        out.steps.push_back(step);
    }

    const Subspace& last = out.terms[lcs.step];
    out.last_term_abelian = true;
    for (std::size_t a = 0; a < last.dim() && out.last_term_abelian; ++a)
        for (std::size_t b = a + 1; b < last.dim(); ++b)
            if (!vec_is_zero(g.bracket(last.basis().row(a), last.basis().row(b)))) {
                out.last_term_abelian = false;
                break;
            }
    if (lcs.step >= 1 && !out.last_term_abelian)
        fail_internal("j_series: last nonzero term is not abelian");

    out.first_inclusion_strict = out.terms.size() < 2 || out.terms[1].dim() < out.terms[0].dim();
    if (!out.first_inclusion_strict) fail_internal("j_series: the first inclusion g^1_J in g is not strict");

    for (std::size_t i = 0; i < out.terms.size(); ++i) {
        std::vector<std::vector<Scalar>> jrows;
        for (std::size_t r = 0; r < out.terms[i].dim(); ++r)
            jrows.push_back(J.apply_j(out.terms[i].basis().row(r)));
        Subspace jimage = Subspace::span(jrows, d, f);
        if (!out.terms[i].contains(jimage))
            fail_internal("j_series: term " + std::to_string(i) + " is not J-invariant");
    }

    if (J.is_rational()) {
        out.terms_rational = true;
        for (const auto& t : out.terms)
            if (!g.is_rational_subspace(t)) {
                out.terms_rational = false;
                fail_internal("j_series: rational J produced a non-rational term");
            }
    }
    return out;
}

std::vector<Subspace> annihilator_series(const ComplexStructure& J) {
    const LieAlgebra& g = J.algebra();
    const std::size_t d = g.dim();
    const std::size_t npairs = d * (d - 1) / 2;
    const auto& lcs = g.lower_central_series();

    // Route A: annihilators of the central series terms.
    std::vector<Subspace> route_a;
    for (const auto& gi : lcs.terms) route_a.push_back(annihilator(gi));
    // terms run g⁰..g^{s+1}: V_i = (g^i)°, so V_0 = (g)° = 0, V_{s+1} = full.

    // Route B: V_i = {α : dα ∈ Λ²V_{i−1}}, from V_0 = 0.
    ExactMatrix dmat(npairs, d, FieldTag::Q); // column k = coefficients of de^k
    for (std::size_t k = 0; k < d; ++k) {
        auto twoform = d_covector(g, basis_vec(d, k));
        for (const auto& [ij, c] : twoform) dmat.set(pair_index(d, ij.first, ij.second), k, c);
    }
    std::vector<Subspace> route_b;
    route_b.push_back(Subspace::zero(d, FieldTag::Q));
    while (route_b.back().dim() < d) {
        const Subspace& prev = route_b.back();
        std::vector<std::vector<Scalar>> wedges;
        for (std::size_t a = 0; a < prev.dim(); ++a)
            for (std::size_t b = a + 1; b < prev.dim(); ++b) {
                auto u = prev.basis().row(a);
                auto v = prev.basis().row(b);
                std::vector<Scalar> w(npairs);
                for (std::size_t p = 0; p < d; ++p)
                    for (std::size_t q = p + 1; q < d; ++q)
                        w[pair_index(d, p, q)] = u[p] * v[q] - u[q] * v[p];
                wedges.push_back(std::move(w));
            }
        Subspace lambda2_prev = Subspace::span(wedges, npairs, FieldTag::Q);
        QuotientMap qm = quotient_coordinates(npairs, lambda2_prev);
        Subspace next = kernel(qm.projection * dmat);
        if (next.dim() <= prev.dim() && next.dim() < d)
            fail_internal("annihilator_series: inductive chain stalls before reaching g*");
        route_b.push_back(std::move(next));
    }

    if (route_a.size() != route_b.size())
        fail_internal("annihilator_series: chain lengths disagree (" +
                      std::to_string(route_a.size()) + " vs " + std::to_string(route_b.size()) +
                      ")");
    for (std::size_t i = 0; i < route_a.size(); ++i)
        if (route_a[i] != route_b[i])
            fail_internal("annihilator_series: V_" + std::to_string(i) +
                          " differs between the dα-condition and the annihilator of g^" +
                          std::to_string(i));
    return route_a;
}

ExactMatrix holomorphic_coframe(const ComplexStructure& J, FieldTag field) {
    const std::size_t d = J.dim();
    ExactMatrix m = J.matrix().transpose().widened(field);
    for (std::size_t k = 0; k < d; ++k) m.set(k, k, m.at(k, k) - Scalar::i());
    Subspace lam = kernel(m);
    if (lam.dim() != d / 2) fail_internal("holomorphic coframe has wrong dimension");
    return lam.basis();
}

GeneratorDerivatives generator_derivatives(const LieAlgebra& g, const ExactMatrix& omega_rows,
                                           FieldTag field) {
    const std::size_t d = g.dim();
    const std::size_t n = omega_rows.rows();
    if (2 * n != d || omega_rows.cols() != d)
        fail_validation("generator_derivatives: expected n x 2n coframe rows");
    GeneratorDerivatives out;
    out.n = n;
    out.field = field;
    out.omegas = omega_rows.widened(field);

    ExactMatrix omega = ExactMatrix::vstack(out.omegas, out.omegas.conj());
    ExactMatrix dual = inverse(omega); // columns are the dual vectors u_a
    out.d.resize(d);
    for (std::size_t id = 0; id < d; ++id) {
        auto twoform = d_covector(g, omega.row(id));
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a + 1; b < d; ++b) {
                Scalar c;
                for (const auto& [ij, val] : twoform) {
                    auto [i, j] = ij;
                    c += val * (dual.at(i, a) * dual.at(j, b) - dual.at(j, a) * dual.at(i, b));
                }
                if (!c.is_zero()) out.d[id][{a, b}] = c;
            }
    }
    return out;
}

std::pair<std::size_t, std::size_t> pair_bidegree(std::size_t n,
                                                  std::pair<std::size_t, std::size_t> ab) {
    std::size_t unbarred = (ab.first < n ? 1 : 0) + (ab.second < n ? 1 : 0);
    return {unbarred, 2 - unbarred};
}

ComplexStructure structure_from_span(const LieAlgebra& g, const ExactMatrix& span,
                                     const std::string& name) {
    const std::size_t d = g.dim();
    const std::size_t n = d / 2;
    if (span.rows() != n || span.cols() != d)
        fail_validation("'" + name + "': holomorphic span must be n x 2n");
    const FieldTag field = join(FieldTag::QI, span.field());
    ExactMatrix stacked = ExactMatrix::vstack(span.widened(field), span.conj().widened(field));
    if (rank(stacked) != d)
        fail(ErrorKind::degenerate_parameter,
             "'" + name + "': span meets its conjugate (not a complex structure)");

    // w·J = i·w on the span and w̄·J = −i·w̄ on conjugates: J = M⁻¹ D M.
    ExactMatrix diag(d, d, field);
    for (std::size_t k = 0; k < n; ++k) diag.set(k, k, Scalar::i());
    for (std::size_t k = n; k < d; ++k) diag.set(k, k, -Scalar::i());
    ExactMatrix jmat = inverse(stacked) * diag * stacked;

    for (const auto& [rc, v] : jmat.entries())
        if (!v.is_real())
            fail_internal("structure_from_span: recovered J has an imaginary entry");
    FieldTag real_field = FieldTag::Q;
    for (const auto& [rc, v] : jmat.entries()) real_field = join(real_field, v.field());
    ExactMatrix jreal(d, d, real_field);
    for (const auto& [rc, v] : jmat.entries()) jreal.set(rc.first, rc.second, v);
    return ComplexStructure::make(g, jreal, name);
}

bool dbar_02_vanishes(const ComplexStructure& J) {
    const FieldTag f = join(FieldTag::QI, J.matrix().field());
    ExactMatrix coframe = holomorphic_coframe(J, f);
    GeneratorDerivatives gd = generator_derivatives(J.algebra(), coframe, f);
    for (std::size_t id = 0; id < gd.n; ++id)
        for (const auto& [ab, c] : gd.d[id])
            if (pair_bidegree(gd.n, ab).first == 0) return false;
    return true;
}

AdaptedBasis adapted_basis(const ComplexStructure& J) {
    J.require_integrable("adapted_basis");
    const LieAlgebra& g = J.algebra();
    const std::size_t d = g.dim();
    const std::size_t n = d / 2;
    const FieldTag f = join(FieldTag::QI, J.matrix().field());

    JSeries js = j_series(J);
    ExactMatrix lam_basis = holomorphic_coframe(J, f);
    Subspace lam10 = Subspace::from_rows(lam_basis);

    AdaptedBasis out;
    out.n = n;
    out.field = f;

    // V_i^{1,0} = (g^i_J)° ∩ λ^{1,0} in the complexified dual.
    for (std::size_t i = 0; i < js.terms.size(); ++i) {
        Subspace ann = kernel(js.terms[i].basis().widened(f));
        Subspace vi = subspace_ops(ann, lam10).intersection;
        std::size_t ni = js.terms[i].dim() / 2;
        if (vi.dim() != n - ni)
            fail_internal("adapted_basis: dim V_" + std::to_string(i) + "^{1,0} = " +
                          std::to_string(vi.dim()) + ", expected " + std::to_string(n - ni));
        out.v10.push_back(std::move(vi));
    }

    // Extend echelon bases level by level, greedily in row order.
    std::vector<std::vector<Scalar>> chosen;
    ExactMatrix stack(0, d, f);
    for (std::size_t i = 1; i < out.v10.size(); ++i) {
        for (std::size_t r = 0; r < out.v10[i].dim(); ++r) {
            auto row = out.v10[i].basis().row(r);
            ExactMatrix cand =
                ExactMatrix::vstack(stack, ExactMatrix::from_rows({row}, f));
            if (rref(cand).rank > stack.rows()) {
                stack = rref(cand).matrix; // keep reduced for fast dependence tests
                chosen.push_back(row);
                out.levels.push_back(i);
            }
        }
    }
    if (chosen.size() != n) fail_internal("adapted_basis: did not reach n forms");
    out.omegas = ExactMatrix::from_rows(chosen, f);

    if (out.levels.empty() || out.levels.front() != 1)
        fail_internal("adapted_basis: no closed (1,0)-form at level 1");

    // d obeys the ordering: dω_l sits in the ideal generated by forms of
    // strictly earlier level (so level-1 forms are closed).
    GeneratorDerivatives gd = generator_derivatives(g, out.omegas, f);
    for (std::size_t l = 0; l < n; ++l) {
        for (const auto& [ab, c] : gd.d[l]) {
            auto [a, b] = ab;
            bool ok = (a < n && out.levels[a] < out.levels[l]) ||
                      (b < n && out.levels[b] < out.levels[l]);
            if (!ok)
                fail_internal("adapted_basis: d omega_" + std::to_string(l + 1) +
                              " escapes the ideal of earlier forms");
        }
    }

    if (J.is_abelian()) {
        // dω_l = Σ A ω_j ∧ conj(ω_k) with j,k < l: pure (1,1) on earlier forms.
        for (std::size_t l = 0; l < n; ++l)
            for (const auto& [ab, c] : gd.d[l]) {
                auto [a, b] = ab;
                bool is11 = a < n && b >= n;
                bool earlier = is11 && a < l && (b - n) < l;
                if (!is11 || !earlier)
                    fail_internal("adapted_basis: abelian J violates the (1,1) shape of d");
            }
    }
    return out;
}

} // namespace nilcoh
