#include "polyflag/linsys.hpp"

#include <cassert>

#include "polyflag/exceptions.hpp"

namespace polyflag {

void LinearSystem::add_le(const RatVector& a, const Rational& b) {
    RatVector neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    add_ge(std::move(neg), -b);
}

void LinearSystem::add_lt(const RatVector& a, const Rational& b) {
    RatVector neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    add_gt(std::move(neg), -b);
}

namespace {

// Dense simplex tableau over rationals.  Standard form:
//   maximize c.z   subject to   M z = r,  z >= 0,  r >= 0.
// Row 0 holds the objective in the form  z0 = obj - sum(reduced costs).
// Bland's rule (least-index entering and leaving) guarantees termination;
// instances here are tiny, so pivot counts are irrelevant.
class Tableau {
public:
    Tableau(int rows, int cols) : rows_(rows), cols_(cols) {
        a_.assign(rows + 1, RatVector(cols + 1, Rational(0)));
        basis_.assign(rows, -1);
    }

    Rational& at(int r, int c) { return a_[r + 1][c]; }
    Rational& rhs(int r) { return a_[r + 1][cols_]; }
    Rational& obj(int c) { return a_[0][c]; }
    Rational& obj_rhs() { return a_[0][cols_]; }
    int basis(int r) const { return basis_[r]; }

    void set_basis(int r, int c) { basis_[r] = c; }

    // Eliminate basic columns from the objective row.
    void price_out() {
        for (int r = 0; r < rows_; ++r) {
            const int b = basis_[r];
            if (b < 0 || a_[0][b] == 0) continue;
            const Rational f = a_[0][b];
            for (int c = 0; c <= cols_; ++c) a_[0][c] -= f * a_[r + 1][c];
        }
    }

    void pivot(int row, int col) {
        const Rational inv = Rational(1) / a_[row + 1][col];
        for (int c = 0; c <= cols_; ++c) a_[row + 1][c] *= inv;
        for (int r = 0; r <= rows_; ++r) {
            if (r == row + 1 || a_[r][col] == 0) continue;
            const Rational f = a_[r][col];
            for (int c = 0; c <= cols_; ++c) a_[r][c] -= f * a_[row + 1][c];
        }
        basis_[row] = col;
    }

    // Maximize the current objective.  Returns false only on unboundedness,
    // which callers rule out by construction.
    bool optimize(int max_col = -1) {
        if (max_col < 0) max_col = cols_;
        for (;;) {
            int enter = -1;
            for (int c = 0; c < max_col; ++c)
                if (a_[0][c] < 0) {  // negative reduced cost improves max
                    enter = c;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int r = 0; r < rows_; ++r) {
                if (a_[r + 1][enter] <= 0) continue;
                Rational ratio = a_[r + 1][cols_] / a_[r + 1][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    int n_rows() const { return rows_; }
    int n_cols() const { return cols_; }

    // Drop a row (used for redundant rows discovered in phase 1).
    void drop_row(int r) {
        a_.erase(a_.begin() + r + 1);
        basis_.erase(basis_.begin() + r);
        --rows_;
    }

private:
    int rows_, cols_;
    RatMatrix a_;
    std::vector<int> basis_;
};

void check_row_dims(const LinearSystem& sys) {
    auto check = [&](const std::vector<std::pair<RatVector, Rational>>& rows) {
        for (const auto& [a, b] : rows)
            if (static_cast<int>(a.size()) != sys.dim)
                throw DimensionMismatchError(
                    "constraint row of length " + std::to_string(a.size()) +
                    " in a system of dimension " + std::to_string(sys.dim));
    };
    check(sys.eq);
    check(sys.ge);
    check(sys.gt);
}

void verify_witness(const LinearSystem& sys, const RatVector& x) {
    for (const auto& [a, b] : sys.eq)
        if (dot(a, x) != b) throw TheoremViolationError("witness fails an equality row");
    for (const auto& [a, b] : sys.ge)
        if (dot(a, x) < b) throw TheoremViolationError("witness fails a weak row");
    for (const auto& [a, b] : sys.gt)
        if (dot(a, x) <= b) throw TheoremViolationError("witness fails a strict row");
}

}  // namespace

Feasibility solve_feasibility(const LinearSystem& sys) {
    check_row_dims(sys);
    const int n = sys.dim;
    const bool strict = !sys.gt.empty();

    // Variable layout: x = u - w with u, w >= 0; one surplus per ge/gt row;
    // the auxiliary slack t and its cap slack when strict rows are present;
    // artificials appended per constraint row for phase 1.
    const int m_eq = static_cast<int>(sys.eq.size());
    const int m_ge = static_cast<int>(sys.ge.size());
    const int m_gt = static_cast<int>(sys.gt.size());
    const int rows = m_eq + m_ge + m_gt + (strict ? 1 : 0);
    const int col_u = 0;
    const int col_w = n;
    const int col_s = 2 * n;                    // surplus for ge rows
    const int col_sg = col_s + m_ge;            // surplus for gt rows
    const int col_t = col_sg + m_gt;            // aux slack t
    const int col_cap = col_t + (strict ? 1 : 0);  // slack of t <= 1
    const int col_art = col_cap + (strict ? 1 : 0);
    const int cols = col_art + rows;

    Tableau tab(rows, cols);
    int r = 0;
    auto load_row = [&](const RatVector& a, const Rational& b, int surplus_col,
                        bool with_t) {
        for (int j = 0; j < n; ++j) {
            tab.at(r, col_u + j) = a[j];
            tab.at(r, col_w + j) = -a[j];
        }
        if (surplus_col >= 0) tab.at(r, surplus_col) = -1;
        if (with_t) tab.at(r, col_t) = -1;
        tab.rhs(r) = b;
        ++r;
    };
    for (const auto& [a, b] : sys.eq) load_row(a, b, -1, false);
    for (int i = 0; i < m_ge; ++i)
        load_row(sys.ge[i].first, sys.ge[i].second, col_s + i, false);
    for (int i = 0; i < m_gt; ++i)
        load_row(sys.gt[i].first, sys.gt[i].second, col_sg + i, true);
    if (strict) {
        tab.at(r, col_t) = 1;  // t + cap = 1
        tab.at(r, col_cap) = 1;
        tab.rhs(r) = 1;
        ++r;
    }
    assert(r == rows);

    // Normalize right-hand sides and install the artificial basis.
    for (int i = 0; i < rows; ++i) {
        if (tab.rhs(i) < 0)
            for (int c = 0; c <= cols; ++c) {
                Rational& v = (c == cols) ? tab.rhs(i) : tab.at(i, c);
                v = -v;
            }
        tab.at(i, col_art + i) = 1;
        tab.set_basis(i, col_art + i);
    }

    // Phase 1: maximize -sum of artificials.
    for (int i = 0; i < rows; ++i) tab.obj(col_art + i) = 1;
    tab.price_out();
    if (!tab.optimize()) throw TheoremViolationError("phase-1 unbounded");
    if (tab.obj_rhs() != 0) return {false, {}};

    // Pivot any artificial still in the basis out, or drop its row.
    for (int i = tab.n_rows() - 1; i >= 0; --i) {
        if (tab.basis(i) < col_art) continue;
        int enter = -1;
        for (int c = 0; c < col_art; ++c)
            if (tab.at(i, c) != 0) {
                enter = c;
                break;
            }
        if (enter >= 0)
            tab.pivot(i, enter);
        else
            tab.drop_row(i);
    }

    if (strict) {
        // Phase 2: maximize t over the feasible region.
        for (int c = 0; c <= cols; ++c) tab.obj(c) = 0;
        tab.obj(col_t) = -1;  // objective row stores -c
        tab.price_out();
        if (!tab.optimize(col_art))
            throw TheoremViolationError("slack maximization unbounded despite cap");
    }

    RatVector z(cols, Rational(0));
    for (int i = 0; i < tab.n_rows(); ++i) z[tab.basis(i)] = tab.rhs(i);
    if (strict && z[col_t] <= 0) return {false, {}};

    RatVector x(n);
    for (int j = 0; j < n; ++j) x[j] = z[col_u + j] - z[col_w + j];
    verify_witness(sys, x);
    return {true, std::move(x)};
}

}  // namespace polyflag
