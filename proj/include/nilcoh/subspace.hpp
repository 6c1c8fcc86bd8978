#pragma once

#include <optional>
#include <vector>

#include "nilcoh/matrix.hpp"

namespace nilcoh {

// Linear subspace of F^ambient. The basis is held in reduced row-echelon
// form, so equality, containment and hashing are structural: two subspaces
// are equal iff their bases are entry-identical.
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace zero(std::size_t ambient, FieldTag field);
    static Subspace full(std::size_t ambient, FieldTag field);
    // Row space of the given matrix; basis is canonicalized through rref.
    static Subspace from_rows(const ExactMatrix& rows);
    static Subspace span(const std::vector<std::vector<Scalar>>& rows, std::size_t ambient,
                         FieldTag field);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    FieldTag field() const { return basis_.field(); }
    const ExactMatrix& basis() const { return basis_; }
    bool is_zero() const { return dim() == 0; }

    Subspace widened(FieldTag f) const;

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;

    // Entry-identical RREF bases (field tags do not participate).
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_.rows() == o.basis_.rows() &&
               basis_.entries() == o.basis_.entries();
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    std::size_t ambient_;
    ExactMatrix basis_;
};

struct SubspaceOps {
    Subspace sum;
    Subspace intersection;
    bool contains = false; // a ⊇ b
};

// Sum, intersection and containment in one pass. Requires equal ambient
// dimensions and equal fields (widen first when mixing).
SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);

// Right null space {x : m x = 0}, returned with an RREF basis;
// dim = cols − rank.
Subspace kernel(const ExactMatrix& m);

// Coordinates on a complement of `ideal`: the non-pivot columns of its RREF
// basis. projection (q×n) kills the ideal; section (n×q) embeds the
// complement; projection ∘ section = identity.
struct QuotientMap {
    std::size_t ambient = 0;
    std::size_t qdim = 0;
    ExactMatrix projection;
    ExactMatrix section;
    std::vector<std::size_t> complement_cols;
};

QuotientMap quotient_coordinates(std::size_t ambient, const Subspace& ideal);

// Covectors vanishing on the row space: right kernel of the basis matrix.
Subspace annihilator(const Subspace& s);

// Solve c · basisRows = target; nullopt when target is outside the row space.
std::optional<std::vector<Scalar>> solve_row_combination(const ExactMatrix& basis_rows,
                                                         const std::vector<Scalar>& target);

} // namespace nilcoh
