#include "nilcoh/subspace.hpp"

#include <algorithm>

namespace nilcoh {

Subspace Subspace::zero(std::size_t ambient, FieldTag field) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = ExactMatrix(0, ambient, field);
    return s;
}

Subspace Subspace::full(std::size_t ambient, FieldTag field) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = ExactMatrix::identity(ambient, field);
    return s;
}

Subspace Subspace::from_rows(const ExactMatrix& rows) {
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = rref(rows).matrix;
    return s;
}

Subspace Subspace::span(const std::vector<std::vector<Scalar>>& rows, std::size_t ambient,
                        FieldTag field) {
    if (rows.empty()) return zero(ambient, field);
    for (const auto& r : rows)
        if (r.size() != ambient) fail_validation("span: row length != ambient dimension");
    return from_rows(ExactMatrix::from_rows(rows, field));
}

Subspace Subspace::widened(FieldTag f) const {
    Subspace s;
    s.ambient_ = ambient_;
    s.basis_ = basis_.widened(f);
    return s;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_) fail_validation("contains: vector length != ambient dimension");
    return solve_row_combination(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) fail_validation("contains: ambient mismatch");
    ExactMatrix stacked = ExactMatrix::vstack(basis_, other.basis_);
    return rref(stacked).rank == dim();
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        fail_validation("subspace_ops: ambient mismatch (" + std::to_string(a.ambient()) + " vs " +
                        std::to_string(b.ambient()) + ")");
    if (a.field() != b.field())
        fail_validation("subspace_ops: field mismatch (" + field_name(a.field()) + " vs " +
                        field_name(b.field()) + ")");
    SubspaceOps out;
    out.sum = Subspace::from_rows(ExactMatrix::vstack(a.basis(), b.basis()));
    out.contains = out.sum.dim() == a.dim();

    // x ∈ a ∩ b  ⟺  x = u·A = v·B; pairs (u,v) are the kernel of [Aᵀ | −Bᵀ].
    ExactMatrix m = ExactMatrix::hstack(a.basis().transpose(),
                                        b.basis().transpose().scaled(Scalar(-1)));
    Subspace pairs = kernel(m);
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < pairs.dim(); ++r) {
        auto uv = pairs.basis().row(r);
        std::vector<Scalar> u(uv.begin(), uv.begin() + static_cast<long>(a.dim()));
        rows.push_back(row_mat(u, a.basis()));
    }
    out.intersection = Subspace::span(rows, a.ambient(), a.field());

    if (out.sum.dim() + out.intersection.dim() != a.dim() + b.dim())
        fail_internal("subspace_ops: Grassmann identity violated");
    return out;
}

Subspace kernel(const ExactMatrix& m) {
    RrefResult r = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(nc);
        v[f] = Scalar(1);
        for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
            v[r.pivots[pr]] = -r.matrix.at(pr, f);
        rows.push_back(std::move(v));
    }
    return Subspace::span(rows, nc, m.field());
}

QuotientMap quotient_coordinates(std::size_t ambient, const Subspace& ideal) {
    if (ideal.ambient() != ambient)
        fail_validation("quotient_coordinates: ideal not contained in ambient space");
    const ExactMatrix& b = ideal.basis();
    RrefResult r = rref(b); // already RREF; recover pivot columns
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : r.pivots) is_pivot[p] = true;

    QuotientMap q;
    q.ambient = ambient;
    q.qdim = ambient - ideal.dim();
    q.projection = ExactMatrix(q.qdim, ambient, ideal.field());
    q.section = ExactMatrix(ambient, q.qdim, ideal.field());
    std::size_t j = 0;
    for (std::size_t f = 0; f < ambient; ++f) {
        if (is_pivot[f]) continue;
        q.complement_cols.push_back(f);
        q.projection.set(j, f, Scalar(1));
        for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
            q.projection.set(j, r.pivots[pr], -r.matrix.at(pr, f));
        q.section.set(f, j, Scalar(1));
        ++j;
    }
    return q;
}

Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

std::optional<std::vector<Scalar>> solve_row_combination(const ExactMatrix& basis_rows,
                                                         const std::vector<Scalar>& target) {
    // c · B = target  ⟺  Bᵀ cᵀ = targetᵀ: eliminate the augmented system.
    const std::size_t k = basis_rows.rows();
    ExactMatrix aug(basis_rows.cols(), k + 1, basis_rows.field());
    for (const auto& [rc, v] : basis_rows.entries()) aug.set(rc.second, rc.first, v);
    FieldTag f = basis_rows.field();
    for (const auto& t : target) f = join(f, t.field());
    aug = aug.widened(f);
    for (std::size_t r = 0; r < target.size(); ++r) aug.set(r, k, target[r]);

    RrefResult rr = rref(aug);
    std::vector<Scalar> c(k);
    for (std::size_t r = 0; r < rr.rank; ++r) {
        std::size_t p = rr.pivots[r];
        if (p == k) return std::nullopt; // inconsistent: pivot in the augmented column
        c[p] = rr.matrix.at(r, k);
    }
    // Solution exists iff consistent and unique on the row space;
    // free columns among the first k mean basis_rows had dependent rows.
    // Verify by substitution to stay safe for non-independent inputs.
    auto check = row_mat(c, basis_rows.widened(f));
    for (std::size_t j = 0; j < target.size(); ++j)
        if (check[j] != target[j]) return std::nullopt;
    return c;
}

} // namespace nilcoh
