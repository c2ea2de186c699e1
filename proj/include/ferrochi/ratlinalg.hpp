#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ferrochi/bigint.hpp"
#include "ferrochi/errors.hpp"

namespace ferrochi {

using RatVector = std::vector<BigRat>;
using RatMatrix = std::vector<RatVector>;

// Reduced row echelon form with leading ones and zero rows dropped.  The
// result is the canonical representative of the row space.
RatMatrix rref(RatMatrix m);

RatMatrix identity_matrix(int n);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatVector mat_vec(const RatMatrix& a, const RatVector& v);
BigRat determinant(RatMatrix m);
RatMatrix inverse(const RatMatrix& m);
RatMatrix transpose(const RatMatrix& m);

// Hyperplane normal . x = offset with a nonzero normal, stored with its first
// nonzero coordinate scaled to 1.
struct RationalHyperplane {
    RatVector normal;
    BigRat offset;

    RationalHyperplane(RatVector n, BigRat off);
    int dimension() const { return static_cast<int>(normal.size()); }

    friend bool operator==(const RationalHyperplane& a, const RationalHyperplane& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
};

// Nonempty affine subspace represented by the canonical RREF of a consistent
// augmented system [A | b]; two flats over the same ambient space are equal
// exactly when their representations are.
class AffineFlat {
public:
    // The ambient space (no constraints).
    explicit AffineFlat(int ambient_dim) : ambient_(ambient_dim) {}

    int ambient_dimension() const { return ambient_; }
    int codimension() const { return static_cast<int>(rows_.size()); }
    const RatMatrix& rows() const { return rows_; }

    // Intersection with a hyperplane; nullopt when empty.
    std::optional<AffineFlat> intersect(const RationalHyperplane& h) const;

    // Whether this flat contains the other as a point set.
    bool contains(const AffineFlat& other) const;
    bool lies_on(const RationalHyperplane& h) const;

    friend bool operator==(const AffineFlat& a, const AffineFlat& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator<(const AffineFlat& a, const AffineFlat& b) { return a.rows_ < b.rows_; }

private:
    int ambient_;
    RatMatrix rows_;  // canonical RREF of [A | b], each row length ambient_ + 1
};

}  // namespace ferrochi
