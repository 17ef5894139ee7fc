#ifndef POLYFLAG_LINSYS_HPP
#define POLYFLAG_LINSYS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polyflag/linalg.hpp"

namespace polyflag {

/// A system of exact linear constraints over free variables x in R^dim:
///   <a, x> =  b   for every (a, b) in eq
///   <a, x> >= b   for every (a, b) in ge
///   <a, x> >  b   for every (a, b) in gt
struct LinearSystem {
    int dim = 0;
    std::vector<std::pair<RatVector, Rational>> eq;
    std::vector<std::pair<RatVector, Rational>> ge;
    std::vector<std::pair<RatVector, Rational>> gt;

    void add_eq(RatVector a, Rational b) { eq.emplace_back(std::move(a), std::move(b)); }
    void add_ge(RatVector a, Rational b) { ge.emplace_back(std::move(a), std::move(b)); }
    void add_gt(RatVector a, Rational b) { gt.emplace_back(std::move(a), std::move(b)); }
    /// <a, x> <= b
    void add_le(const RatVector& a, const Rational& b);
    /// <a, x> < b
    void add_lt(const RatVector& a, const Rational& b);
};

struct Feasibility {
    bool feasible = false;
    RatVector witness;  // meaningful only when feasible

    explicit operator bool() const { return feasible; }
};

/// Exact feasibility decision by simplex with Bland's anti-cycling rule.
///
/// Strict rows are handled by maximizing an auxiliary slack t with all
/// strict rows relaxed to ">= b + t" and t capped at 1; the system is
/// strictly feasible iff the optimum satisfies t > 0.  The returned witness
/// satisfies every row exactly (equalities exactly, strict rows strictly);
/// this is re-checked before returning.
Feasibility solve_feasibility(const LinearSystem& sys);

}  // namespace polyflag

#endif
