#include "polyflag/fan.hpp"

#include <algorithm>
#include <set>

#include "polyflag/exceptions.hpp"
#include "polyflag/linsys.hpp"

namespace polyflag {

int SignCone::dim() const {
    int k = 0;
    for (int8_t s : sigma) k += (s != 0);
    return k;
}

bool SignCone::contains(const RatVector& p) const {
    if (static_cast<int>(p.size()) != ambient_dim())
        throw DimensionMismatchError("SignCone::contains");
    for (int i = 0; i < ambient_dim(); ++i) {
        if (sigma[i] == 0 && p[i] != 0) return false;
        if (sigma[i] > 0 && p[i] < 0) return false;
        if (sigma[i] < 0 && p[i] > 0) return false;
    }
    return true;
}

bool SignCone::subset_of(const SignCone& other) const {
    for (int i = 0; i < ambient_dim(); ++i) {
        if (other.sigma[i] == 0 && sigma[i] != 0) return false;
        if (other.sigma[i] != 0 && sigma[i] != 0 && sigma[i] != other.sigma[i])
            return false;
    }
    return true;
}

SignCone SignCone::meet(const SignCone& other) const {
    if (other.ambient_dim() != ambient_dim())
        throw DimensionMismatchError("SignCone::meet");
    SignCone m;
    m.sigma.resize(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
        m.sigma[i] = (sigma[i] == other.sigma[i]) ? sigma[i] : 0;
    return m;
}

std::vector<int> SignCone::support() const {
    std::vector<int> s;
    for (int i = 0; i < ambient_dim(); ++i)
        if (sigma[i] != 0) s.push_back(i);
    return s;
}

int SignCone::code() const {
    int c = 0;
    for (int i = ambient_dim() - 1; i >= 0; --i) c = 3 * c + (sigma[i] + 1);
    return c;
}

std::string SignCone::str() const {
    std::string s;
    for (int8_t v : sigma) s += (v > 0 ? '+' : v < 0 ? '-' : '0');
    return s;
}

SignCone SignCone::parse(const std::string& text) {
    SignCone c;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '+': c.sigma.push_back(1); break;
            case '-': c.sigma.push_back(-1); break;
            case '0': c.sigma.push_back(0); break;
            default:
                throw ParseError("invalid sign character", 1, static_cast<int>(i) + 1);
        }
    }
    return c;
}

std::vector<SignCone> all_sign_cones(int d) {
    std::vector<SignCone> out;
    int total = 1;
    for (int i = 0; i < d; ++i) total *= 3;
    out.reserve(total);
    for (int code = 0; code < total; ++code) {
        SignCone c;
        c.sigma.resize(d);
        int v = code;
        for (int i = 0; i < d; ++i) {
            c.sigma[i] = static_cast<int8_t>(v % 3 - 1);
            v /= 3;
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<SignCone> all_orthants(int d) {
    std::vector<SignCone> out;
    out.reserve(1 << d);
    for (int mask = 0; mask < (1 << d); ++mask) {
        SignCone c;
        c.sigma.resize(d);
        for (int i = 0; i < d; ++i) c.sigma[i] = (mask >> i & 1) ? -1 : 1;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const SignCone& a, const SignCone& b) { return a.code() < b.code(); });
    return out;
}

SignCone supp_fan(const RatVector& p) {
    SignCone c;
    c.sigma.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        c.sigma[i] = static_cast<int8_t>(sgn(p[i]));
    return c;
}

std::vector<SignCone> cone_facets(const SignCone& D) {
    if (D.is_zero_cone()) throw EmptyInputError("the zero cone has no facets");
    std::vector<SignCone> out;
    for (int i = 0; i < D.ambient_dim(); ++i) {
        if (D.sigma[i] == 0) continue;
        SignCone c = D;
        c.sigma[i] = 0;
        out.push_back(std::move(c));
    }
    return out;
}

RatVector inward_normal(const SignCone& C, const SignCone& D) {
    if (C.ambient_dim() != D.ambient_dim())
        throw DimensionMismatchError("inward_normal");
    int zeroed = -1;
    for (int i = 0; i < D.ambient_dim(); ++i) {
        if (C.sigma[i] == D.sigma[i]) continue;
        if (C.sigma[i] == 0 && D.sigma[i] != 0 && zeroed < 0) {
            zeroed = i;
            continue;
        }
        zeroed = -2;
        break;
    }
    if (zeroed < 0)
        throw EmptyInputError("inward_normal: first cone is not a facet of the second");
    return unit_vec(D.ambient_dim(), zeroed, Rational(int(D.sigma[zeroed])));
}

RatVector one_vector(const SignCone& C) {
    RatVector v(C.ambient_dim());
    for (int i = 0; i < C.ambient_dim(); ++i) v[i] = Rational(int(C.sigma[i]));
    return v;
}

namespace {

struct CoordRange {
    Rational lo, hi;
};

std::vector<CoordRange> coord_ranges(const Polytope& P, const Face& F) {
    std::vector<int> ids = face_vertex_list(F);
    std::vector<CoordRange> r(P.ambient_dim());
    for (int c = 0; c < P.ambient_dim(); ++c) {
        r[c].lo = r[c].hi = P.vertex(ids[0])[c];
        for (std::size_t k = 1; k < ids.size(); ++k) {
            const Rational& x = P.vertex(ids[k])[c];
            if (x < r[c].lo) r[c].lo = x;
            if (x > r[c].hi) r[c].hi = x;
        }
    }
    return r;
}

RatVector face_barycenter(const Polytope& P, const Face& F) {
    std::vector<int> ids = face_vertex_list(F);
    RatVector b = zero_vec(P.ambient_dim());
    for (int id : ids) b = add(b, P.vertex(id));
    return scale(Rational(1) / Rational(static_cast<int>(ids.size())), b);
}

// Equalities for the affine hull and the facets containing F, strict rows
// for the facets not containing F: solutions are exactly relint F.
LinearSystem relint_system(const Polytope& P, const Face& F) {
    LinearSystem sys;
    sys.dim = P.ambient_dim();
    for (const auto& [a, b] : P.hull_equations()) sys.add_eq(a, b);
    for (int f = 0; f < P.n_facets(); ++f) {
        const auto& ineq = P.facets()[f];
        if (F.verts.is_subset_of(P.facet_vertices(f)))
            sys.add_eq(ineq.normal, ineq.offset);
        else
            sys.add_lt(ineq.normal, ineq.offset);
    }
    return sys;
}

enum class ConeMode { Closed, Relint };

bool relint_face_meets(const Polytope& P, const Face& F, const SignCone& C,
                       ConeMode mode) {
    if (F.verts.none()) throw EmptyInputError("relint of the empty face");
    if (C.ambient_dim() != P.ambient_dim())
        throw DimensionMismatchError("cone/polytope dimension mismatch");

    // Exact per-coordinate rejections: the image of the i-th coordinate on
    // relint F is the open interval (lo, hi), or {lo} when constant.
    auto ranges = coord_ranges(P, F);
    for (int i = 0; i < P.ambient_dim(); ++i) {
        const auto& [lo, hi] = ranges[i];
        const bool constant = (lo == hi);
        switch (C.sigma[i]) {
            case 0:
                if (!(constant ? lo == 0 : (lo < 0 && hi > 0))) return false;
                break;
            case 1:
                if (mode == ConeMode::Closed) {
                    if (!(hi > 0 || (constant && lo == 0))) return false;
                } else if (hi <= 0) {
                    return false;
                }
                break;
            case -1:
                if (mode == ConeMode::Closed) {
                    if (!(lo < 0 || (constant && lo == 0))) return false;
                } else if (lo >= 0) {
                    return false;
                }
                break;
        }
    }

    // The barycenter lies in relint F; if it also satisfies the cone we are
    // done without a solve.
    RatVector b = face_barycenter(P, F);
    bool b_ok = true;
    for (int i = 0; i < P.ambient_dim() && b_ok; ++i) {
        if (C.sigma[i] == 0)
            b_ok = (b[i] == 0);
        else if (mode == ConeMode::Closed)
            b_ok = (Rational(int(C.sigma[i])) * b[i] >= 0);
        else
            b_ok = (Rational(int(C.sigma[i])) * b[i] > 0);
    }
    if (b_ok) return true;

    LinearSystem sys = relint_system(P, F);
    for (int i = 0; i < P.ambient_dim(); ++i) {
        if (C.sigma[i] == 0) {
            sys.add_eq(unit_vec(P.ambient_dim(), i), 0);
        } else {
            RatVector row = unit_vec(P.ambient_dim(), i, Rational(int(C.sigma[i])));
            if (mode == ConeMode::Closed)
                sys.add_ge(std::move(row), 0);
            else
                sys.add_gt(std::move(row), 0);
        }
    }
    return solve_feasibility(sys).feasible;
}

}  // namespace

bool relint_face_meets_cone(const Polytope& P, const Face& F, const SignCone& C) {
    return relint_face_meets(P, F, C, ConeMode::Closed);
}

bool relint_face_meets_relint_cone(const Polytope& P, const Face& F,
                                   const SignCone& C) {
    return relint_face_meets(P, F, C, ConeMode::Relint);
}

bool SignOracle::relint_meets(FaceId f, const SignCone& C) {
    auto key = std::make_pair(std::make_pair(f.rank, f.idx), C.code());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    bool res = relint_face_meets_cone(*P_, P_->lattice().face(f), C);
    cache_.emplace(key, res);
    return res;
}

FlagSignResult flag_sign_scan(SignOracle& oracle, const Flag& F) {
    const Polytope& P = oracle.polytope();
    const int d = P.ambient_dim();
    const int k = F.top_dim();
    if (k != P.dim())
        throw DimensionMismatchError("flag does not reach the polytope's dimension");

    FlagSignResult out;
    for (const auto& C : all_sign_cones(d)) {
        bool keep = true;
        for (int i = 0; i <= k && keep; ++i) keep = oracle.relint_meets(F.at_dim(i), C);
        if (keep) out.kept.push_back(C);
    }
    if (out.kept.empty())
        throw TheoremViolationError(
            "no standard-fan cone meets every face of the flag");

    std::set<int> kept_codes;
    for (const auto& c : out.kept) kept_codes.insert(c.code());
    SignCone sign = out.kept[0];
    for (const auto& c : out.kept) {
        for (const auto& c2 : out.kept)
            if (!kept_codes.count(c.meet(c2).code()))
                throw TheoremViolationError(
                    "kept cones of a flag not closed under intersection: " +
                    c.str() + " and " + c2.str());
        sign = sign.meet(c);
    }
    if (!kept_codes.count(sign.code()))
        throw TheoremViolationError("flag sign escaped the kept set");
    if (sign.dim() < k)
        throw TheoremViolationError("flag sign of dimension below the polytope's");
    out.sign = std::move(sign);
    return out;
}

SignCone flag_sign(const Polytope& P, const Flag& F) {
    SignOracle oracle(P);
    return flag_sign_scan(oracle, F).sign;
}

}  // namespace polyflag
