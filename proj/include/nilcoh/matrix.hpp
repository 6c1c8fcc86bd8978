#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "nilcoh/scalar.hpp"

namespace nilcoh {

// Sparse exact matrix: only nonzero entries are stored. The declared field
// bounds every entry; inserting an entry from a larger field is a
// field-mismatch error.
class ExactMatrix {
public:
    using Index = std::size_t;
    using EntryMap = std::map<std::pair<Index, Index>, Scalar>;

    ExactMatrix() : rows_(0), cols_(0), field_(FieldTag::Q) {}
    ExactMatrix(Index rows, Index cols, FieldTag field = FieldTag::Q)
        : rows_(rows), cols_(cols), field_(field) {}

    static ExactMatrix identity(Index n, FieldTag field = FieldTag::Q);
    static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows, FieldTag field);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    FieldTag field() const { return field_; }
    const EntryMap& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    const Scalar& at(Index r, Index c) const;
    void set(Index r, Index c, const Scalar& v);

    std::vector<Scalar> row(Index r) const;
    std::vector<std::vector<Scalar>> to_dense() const;

    ExactMatrix transpose() const;
    ExactMatrix conj() const;
    ExactMatrix scaled(const Scalar& s) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    // Same entries viewed over a larger field.
    ExactMatrix widened(FieldTag f) const;

    static ExactMatrix vstack(const ExactMatrix& top, const ExactMatrix& bottom);
    static ExactMatrix hstack(const ExactMatrix& left, const ExactMatrix& right);

private:
    Index rows_, cols_;
    FieldTag field_;
    EntryMap entries_;
};

struct RrefResult {
    ExactMatrix matrix; // rank × cols, zero rows dropped
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

// Unique reduced row-echelon form. Pivot choice (smallest digit size, then
// lowest row) only shapes intermediate growth; the output is canonical.
RrefResult rref(const ExactMatrix& m);

// Rank via fraction-free (Bareiss) elimination on denominator-cleared rows.
// Always equals rref(m).rank; avoids per-step GCD normalization.
std::size_t rank(const ExactMatrix& m);

// m · v and v · m with vectors as columns resp. rows.
std::vector<Scalar> mat_vec(const ExactMatrix& m, const std::vector<Scalar>& v);
std::vector<Scalar> row_mat(const std::vector<Scalar>& v, const ExactMatrix& m);

// Inverse of a square matrix; fails on singular input.
ExactMatrix inverse(const ExactMatrix& m);

} // namespace nilcoh
