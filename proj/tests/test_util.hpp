#ifndef POLYFLAG_TEST_UTIL_HPP
#define POLYFLAG_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "polyflag/linalg.hpp"
#include "polyflag/linsys.hpp"
#include "polyflag/polytope.hpp"

namespace polyflag::testutil {

// Deterministic across platforms: raw engine output + modulo, never
// std::uniform_int_distribution (whose mapping is implementation-defined).
struct Rng {
    std::mt19937_64 g;
    explicit Rng(unsigned long long seed) : g(seed) {}
    int uniform(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(g() % static_cast<unsigned long long>(hi - lo + 1));
    }
    Rational rat(int lo, int hi, int max_den = 1) {
        int den = uniform(1, max_den);
        return Rational(Integer(uniform(lo * den, hi * den)), Integer(den));
    }
};

// Independent feasibility oracle: enumerate the basic solutions of the
// weak relaxation and decide strict feasibility by the maximum slack each
// strict row attains over them.  Valid only for bounded systems; callers
// include box bounds.
inline bool feasible_bruteforce(const LinearSystem& sys) {
    std::vector<std::pair<RatVector, Rational>> rows = sys.eq;
    for (const auto& r : sys.ge) rows.push_back(r);
    for (const auto& r : sys.gt) rows.push_back(r);

    auto weakly_feasible = [&](const RatVector& x) {
        for (const auto& [a, b] : sys.eq)
            if (dot(a, x) != b) return false;
        for (const auto& [a, b] : sys.ge)
            if (dot(a, x) < b) return false;
        for (const auto& [a, b] : sys.gt)
            if (dot(a, x) < b) return false;  // relaxed
        return true;
    };

    std::vector<RatVector> basics;
    const int n = static_cast<int>(rows.size());
    const int d = sys.dim;
    std::vector<int> idx(d);
    auto rec = [&](auto&& self, int start, int k) -> void {
        if (k == d) {
            std::vector<RatVector> lhs;
            std::vector<Rational> rhs;
            for (int i = 0; i < d; ++i) {
                lhs.push_back(rows[idx[i]].first);
                rhs.push_back(rows[idx[i]].second);
            }
            auto x = solve_unique(lhs, rhs, d);
            if (x && weakly_feasible(*x)) basics.push_back(*x);
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[k] = i;
            self(self, i + 1, k + 1);
        }
    };
    if (d == 0) {
        RatVector x;
        return weakly_feasible(x) && sys.gt.empty();
    }
    rec(rec, 0, 0);
    if (basics.empty()) return false;
    // Strictly feasible iff every strict row has positive slack somewhere
    // on the weak region (then the barycenter of maximizers works).
    for (const auto& [a, b] : sys.gt) {
        bool positive = false;
        for (const auto& x : basics)
            if (dot(a, x) > b) {
                positive = true;
                break;
            }
        if (!positive) return false;
    }
    return true;
}

inline std::vector<RatVector> square_verts() {
    using R = Rational;
    return {{R(1), R(1)}, {R(1), R(-1)}, {R(-1), R(1)}, {R(-1), R(-1)}};
}

inline std::vector<RatVector> cross_verts(int d) {
    std::vector<RatVector> v;
    for (int i = 0; i < d; ++i) {
        v.push_back(unit_vec(d, i, 1));
        v.push_back(unit_vec(d, i, -1));
    }
    return v;
}

inline std::vector<RatVector> cube_verts(int d) {
    std::vector<RatVector> v;
    for (int mask = 0; mask < (1 << d); ++mask) {
        RatVector p(d);
        for (int i = 0; i < d; ++i) p[i] = (mask >> i & 1) ? -1 : 1;
        v.push_back(p);
    }
    return v;
}

/// The two locally anti-blocking hexagons used across the tests:
/// slant = -1 gives hull +-{(1,0),(0,1),(-1,1)}, slant = +1 the mirror
/// image hull +-{(1,0),(0,1),(1,1)}.
inline std::vector<RatVector> hexagon_verts(int slant) {
    using R = Rational;
    std::vector<RatVector> v = {{R(1), R(0)},  {R(0), R(1)},  {R(slant), R(1)},
                                {R(-1), R(0)}, {R(0), R(-1)}, {R(-slant), R(-1)}};
    return v;
}

/// Vertices of the clique polytope of the 4-path (the 448-flag example).
inline std::vector<RatVector> path4_clique_verts() {
    std::vector<RatVector> v;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            v.push_back({Rational(s1), Rational(s2), Rational(0), Rational(0)});
            v.push_back({Rational(0), Rational(s1), Rational(s2), Rational(0)});
            v.push_back({Rational(0), Rational(0), Rational(s1), Rational(s2)});
        }
    return v;
}

/// Unit cube with the corner (1,1,1) cut off by x+y+z <= 5/2: a proper
/// locally anti-blocking polytope that is neither 1-unconditional nor a
/// flag minimizer (60 flags).
inline std::vector<RatVector> truncated_cube_verts() {
    using R = Rational;
    std::vector<RatVector> v;
    for (auto& p : cube_verts(3))
        if (!(p[0] == 1 && p[1] == 1 && p[2] == 1)) v.push_back(p);
    v.push_back({R(1), R(1), R(1, 2)});
    v.push_back({R(1), R(1, 2), R(1)});
    v.push_back({R(1, 2), R(1), R(1)});
    return v;
}

}  // namespace polyflag::testutil

#endif
