#ifndef POLYFLAG_LINALG_HPP
#define POLYFLAG_LINALG_HPP

#include <optional>
#include <vector>

#include "polyflag/rational.hpp"

namespace polyflag {

// Elementary exact vector arithmetic.
Rational dot(const RatVector& a, const RatVector& b);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const Rational& c, const RatVector& v);
bool is_zero_vec(const RatVector& v);
RatVector zero_vec(int d);
RatVector unit_vec(int d, int i, const Rational& s = 1);

/// Lexicographic order on coordinate vectors; the canonical vertex order.
bool lex_less(const RatVector& a, const RatVector& b);

/// Dimension of the linear span, by exact Gaussian elimination.
/// Throws DimensionMismatchError on mixed-length input.
int rank(const std::vector<RatVector>& vectors);

/// True iff v lies in the linear span of the given vectors.
bool in_span(const std::vector<RatVector>& vectors, const RatVector& v);

/// Basis of { x : <row, x> = 0 for every row }.
std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, int dim);

/// Unique solution of rows * x = rhs, if the system is consistent and the
/// rows have full column rank; nullopt otherwise.
std::optional<RatVector> solve_unique(const std::vector<RatVector>& rows,
                                      const std::vector<Rational>& rhs,
                                      int dim);

/// Scale a nonzero rational vector to coprime integer entries, preserving
/// sign.  Used to deduplicate hyperplane normals.
RatVector canonical_scale(const RatVector& v);

/// An affine subspace given by a basepoint and an independent direction
/// basis.  dim() equals the number of basis vectors.
struct AffineSubspace {
    RatVector base;
    std::vector<RatVector> basis;

    int ambient_dim() const { return static_cast<int>(base.size()); }
    int dim() const { return static_cast<int>(basis.size()); }

    bool contains(const RatVector& p) const;

    /// Rows (a, b) with <a, x> = b exactly on the subspace.
    std::vector<std::pair<RatVector, Rational>> equations() const;

    /// Affine hull of a nonempty point set.
    static AffineSubspace from_points(const std::vector<RatVector>& pts);
};

}  // namespace polyflag

#endif
