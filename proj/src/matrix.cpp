#include "nilcoh/matrix.hpp"

#include <algorithm>
#include <limits>

namespace nilcoh {

namespace {
const Scalar kZero{};

void check_index(const ExactMatrix& m, std::size_t r, std::size_t c) {
    if (r >= m.rows() || c >= m.cols())
        fail_validation("matrix index out of range: (" + std::to_string(r) + "," +
                        std::to_string(c) + ") in " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
}
} // namespace

ExactMatrix ExactMatrix::identity(Index n, FieldTag field) {
    ExactMatrix m(n, n, field);
    for (Index k = 0; k < n; ++k) m.set(k, k, Scalar(1));
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows, FieldTag field) {
    Index nr = rows.size();
    Index nc = nr == 0 ? 0 : rows[0].size();
    ExactMatrix m(nr, nc, field);
    for (Index r = 0; r < nr; ++r) {
        if (rows[r].size() != nc) fail_validation("ragged row list");
        for (Index c = 0; c < nc; ++c)
            if (!rows[r][c].is_zero()) m.set(r, c, rows[r][c]);
    }
    return m;
}

const Scalar& ExactMatrix::at(Index r, Index c) const {
    check_index(*this, r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? kZero : it->second;
}

void ExactMatrix::set(Index r, Index c, const Scalar& v) {
    check_index(*this, r, c);
    if (v.is_zero()) {
        entries_.erase({r, c});
        return;
    }
    if (!subfield_of(v.field(), field_))
        fail_validation("field mismatch: entry in " + field_name(v.field()) +
                        " stored into matrix over " + field_name(field_));
    entries_[{r, c}] = v;
}

std::vector<Scalar> ExactMatrix::row(Index r) const {
    std::vector<Scalar> out(cols_);
    auto lo = entries_.lower_bound({r, 0});
    auto hi = entries_.lower_bound({r + 1, 0});
    for (auto it = lo; it != hi; ++it) out[it->first.second] = it->second;
    return out;
}

std::vector<std::vector<Scalar>> ExactMatrix::to_dense() const {
    std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols_));
    for (const auto& [rc, v] : entries_) out[rc.first][rc.second] = v;
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols_, rows_, field_);
    for (const auto& [rc, v] : entries_) m.set(rc.second, rc.first, v);
    return m;
}

ExactMatrix ExactMatrix::conj() const {
    ExactMatrix m(rows_, cols_, field_);
    for (const auto& [rc, v] : entries_) m.set(rc.first, rc.second, v.conj());
    return m;
}

ExactMatrix ExactMatrix::scaled(const Scalar& s) const {
    ExactMatrix m(rows_, cols_, join(field_, s.field()));
    for (const auto& [rc, v] : entries_) m.set(rc.first, rc.second, v * s);
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) fail_validation("matrix product shape mismatch");
    ExactMatrix m(rows_, o.cols_, join(field_, o.field_));
    // Accumulate through the sparse left factor.
    std::map<std::pair<Index, Index>, Scalar> acc;
    for (const auto& [rc, v] : entries_) {
        auto lo = o.entries_.lower_bound({rc.second, 0});
        auto hi = o.entries_.lower_bound({rc.second + 1, 0});
        for (auto it = lo; it != hi; ++it) acc[{rc.first, it->first.second}] += v * it->second;
    }
    for (const auto& [rc, v] : acc)
        if (!v.is_zero()) m.set(rc.first, rc.second, v);
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail_validation("matrix sum shape mismatch");
    ExactMatrix m(rows_, cols_, join(field_, o.field_));
    for (const auto& [rc, v] : entries_) m.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : o.entries_) m.set(rc.first, rc.second, m.at(rc.first, rc.second) + v);
    return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o.scaled(Scalar(-1)); }

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

ExactMatrix ExactMatrix::widened(FieldTag f) const {
    if (!subfield_of(field_, f)) fail_validation("widened() must not shrink the field");
    ExactMatrix m = *this;
    m.field_ = f;
    return m;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& top, const ExactMatrix& bottom) {
    if (top.cols() != bottom.cols()) fail_validation("vstack column mismatch");
    ExactMatrix m(top.rows() + bottom.rows(), top.cols(), join(top.field(), bottom.field()));
    for (const auto& [rc, v] : top.entries()) m.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : bottom.entries()) m.set(top.rows() + rc.first, rc.second, v);
    return m;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& left, const ExactMatrix& right) {
    if (left.rows() != right.rows()) fail_validation("hstack row mismatch");
    ExactMatrix m(left.rows(), left.cols() + right.cols(), join(left.field(), right.field()));
    for (const auto& [rc, v] : left.entries()) m.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : right.entries()) m.set(rc.first, left.cols() + rc.second, v);
    return m;
}

RrefResult rref(const ExactMatrix& m) {
    auto a = m.to_dense();
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < nc && prow < nr; ++col) {
        // Pivot: smallest digit size among candidates, ties to the lowest row.
        std::size_t best = nr;
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = prow; r < nr; ++r) {
            if (a[r][col].is_zero()) continue;
            std::size_t sz = a[r][col].digit_size();
            if (sz < best_size) {
                best_size = sz;
                best = r;
            }
        }
        if (best == nr) continue;
        std::swap(a[prow], a[best]);
        Scalar inv = a[prow][col].inverse();
        for (std::size_t c = col; c < nc; ++c)
            if (!a[prow][c].is_zero()) a[prow][c] *= inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == prow || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (std::size_t c = col; c < nc; ++c)
                if (!a[prow][c].is_zero()) a[r][c] -= f * a[prow][c];
        }
        pivots.push_back(col);
        ++prow;
    }
    RrefResult out;
    out.rank = prow;
    out.pivots = std::move(pivots);
    out.matrix = ExactMatrix(prow, nc, m.field());
    for (std::size_t r = 0; r < prow; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            if (!a[r][c].is_zero()) out.matrix.set(r, c, a[r][c]);
    return out;
}

namespace {

// Scale each row by the lcm of all component denominators so entries become
// integral (denominator 1 in every component); row scaling preserves rank.
void clear_denominators(std::vector<std::vector<Scalar>>& a) {
    for (auto& row : a) {
        Integer l = 1;
        for (const auto& s : row)
            for (std::size_t k = 0; k < 4; ++k) l = lcm(l, denominator(s.coeff(k)));
        if (l == 1) continue;
        Scalar f{Rational(l)};
        for (auto& s : row) s *= f;
    }
}

} // namespace

std::size_t rank(const ExactMatrix& m) {
    auto a = m.to_dense();
    clear_denominators(a);
    const std::size_t nr = m.rows(), nc = m.cols();
    Scalar prev(1);
    std::size_t rk = 0;
    for (std::size_t col = 0; col < nc && rk < nr; ++col) {
        std::size_t piv = nr;
        for (std::size_t r = rk; r < nr; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == nr) continue;
        std::swap(a[rk], a[piv]);
        for (std::size_t r = rk + 1; r < nr; ++r) {
            for (std::size_t c = col + 1; c < nc; ++c)
                a[r][c] = (a[rk][col] * a[r][c] - a[r][col] * a[rk][c]) / prev;
            a[r][col] = Scalar();
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) fail_validation("inverse: matrix not square");
    const std::size_t n = m.rows();
    ExactMatrix aug = ExactMatrix::hstack(m, ExactMatrix::identity(n, m.field()));
    RrefResult r = rref(aug);
    if (r.rank != n || r.pivots.back() >= n) fail_validation("inverse: singular matrix");
    ExactMatrix out(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!r.matrix.at(i, n + j).is_zero()) out.set(i, j, r.matrix.at(i, n + j));
    return out;
}

std::vector<Scalar> mat_vec(const ExactMatrix& m, const std::vector<Scalar>& v) {
    if (v.size() != m.cols()) fail_validation("mat_vec: vector length mismatch");
    std::vector<Scalar> out(m.rows());
    for (const auto& [rc, val] : m.entries())
        if (!v[rc.second].is_zero()) out[rc.first] += val * v[rc.second];
    return out;
}

std::vector<Scalar> row_mat(const std::vector<Scalar>& v, const ExactMatrix& m) {
    if (v.size() != m.rows()) fail_validation("row_mat: vector length mismatch");
    std::vector<Scalar> out(m.cols());
    for (const auto& [rc, val] : m.entries())
        if (!v[rc.first].is_zero()) out[rc.second] += v[rc.first] * val;
    return out;
}

} // namespace nilcoh
