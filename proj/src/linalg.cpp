#include "polyflag/linalg.hpp"

#include <algorithm>

#include "polyflag/exceptions.hpp"

namespace polyflag {

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatchError("dot: vectors of length " +
                                     std::to_string(a.size()) + " and " +
                                     std::to_string(b.size()));
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector add(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("add");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector sub(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("sub");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVector scale(const Rational& c, const RatVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool is_zero_vec(const RatVector& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Rational& x) { return x == 0; });
}

RatVector zero_vec(int d) { return RatVector(d, Rational(0)); }

RatVector unit_vec(int d, int i, const Rational& s) {
    RatVector v(d, Rational(0));
    v.at(i) = s;
    return v;
}

bool lex_less(const RatVector& a, const RatVector& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return a.size() < b.size();
}

namespace {

void check_uniform(const std::vector<RatVector>& vectors) {
    for (std::size_t i = 1; i < vectors.size(); ++i)
        if (vectors[i].size() != vectors[0].size())
            throw DimensionMismatchError(
                "vectors of mixed dimension: " +
                std::to_string(vectors[0].size()) + " vs " +
                std::to_string(vectors[i].size()));
}

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(RatMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int cols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
        int pr = -1;
        for (int r = row; r < static_cast<int>(m.size()); ++r)
            if (m[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        const Rational inv = Rational(1) / m[row][col];
        for (int c = col; c < cols; ++c) m[row][c] *= inv;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(const std::vector<RatVector>& vectors) {
    if (vectors.empty()) return 0;
    check_uniform(vectors);
    RatMatrix m = vectors;
    return static_cast<int>(echelon(m).size());
}

bool in_span(const std::vector<RatVector>& vectors, const RatVector& v) {
    if (is_zero_vec(v)) return true;
    std::vector<RatVector> aug = vectors;
    aug.push_back(v);
    return rank(aug) == rank(vectors);
}

std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, int dim) {
    RatMatrix m = rows;
    for (const auto& r : m)
        if (static_cast<int>(r.size()) != dim)
            throw DimensionMismatchError("nullspace");
    std::vector<int> pivots = echelon(m);
    std::vector<bool> is_pivot(dim, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (int free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        RatVector v = zero_vec(dim);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve_unique(const std::vector<RatVector>& rows,
                                      const std::vector<Rational>& rhs,
                                      int dim) {
    if (rows.size() != rhs.size()) throw DimensionMismatchError("solve_unique");
    RatMatrix aug(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != dim)
            throw DimensionMismatchError("solve_unique");
        aug[i] = rows[i];
        aug[i].push_back(rhs[i]);
    }
    std::vector<int> pivots = echelon(aug);
    // Inconsistent if some pivot lands in the rhs column.
    if (!pivots.empty() && pivots.back() == dim) return std::nullopt;
    if (static_cast<int>(pivots.size()) != dim) return std::nullopt;
    RatVector x(dim);
    for (int i = 0; i < dim; ++i) x[pivots[i]] = aug[i][dim];
    return x;
}

RatVector canonical_scale(const RatVector& v) {
    Integer den_lcm = 1;
    for (const auto& x : v)
        den_lcm = lcm(den_lcm, Integer(denominator(x)));
    Integer num_gcd = 0;
    RatVector scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        scaled[i] = v[i] * Rational(den_lcm);
        num_gcd = gcd(num_gcd, Integer(numerator(scaled[i])));
    }
    if (num_gcd == 0) return scaled;  // zero vector
    for (auto& x : scaled) x /= Rational(num_gcd);
    return scaled;
}

bool AffineSubspace::contains(const RatVector& p) const {
    return in_span(basis, sub(p, base));
}

std::vector<std::pair<RatVector, Rational>> AffineSubspace::equations() const {
    std::vector<std::pair<RatVector, Rational>> eqs;
    for (const auto& n : nullspace(basis, ambient_dim()))
        eqs.emplace_back(n, dot(n, base));
    return eqs;
}

AffineSubspace AffineSubspace::from_points(const std::vector<RatVector>& pts) {
    if (pts.empty()) throw EmptyInputError("affine hull of an empty point set");
    check_uniform(pts);
    AffineSubspace a;
    a.base = pts[0];
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVector d = sub(pts[i], a.base);
        if (!in_span(a.basis, d)) a.basis.push_back(std::move(d));
    }
    return a;
}

}  // namespace polyflag
