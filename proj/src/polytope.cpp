#include "polyflag/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polyflag/exceptions.hpp"

namespace polyflag {

namespace {

std::vector<int> set_bits(const VertexSet& s) {
    std::vector<int> out;
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

// Deterministic face order inside a rank: lexicographic by vertex indices.
bool face_verts_less(const VertexSet& a, const VertexSet& b) {
    auto ia = a.find_first(), ib = b.find_first();
    while (ia != VertexSet::npos && ib != VertexSet::npos) {
        if (ia != ib) return ia < ib;
        ia = a.find_next(ia);
        ib = b.find_next(ib);
    }
    return ia == VertexSet::npos && ib != VertexSet::npos;
}

// Walks all k-subsets of [0, n).
class Combinations {
public:
    Combinations(int n, int k) : n_(n), k_(k), idx_(k) {
        for (int i = 0; i < k; ++i) idx_[i] = i;
        done_ = k > n;
    }
    bool done() const { return done_; }
    const std::vector<int>& current() const { return idx_; }
    void next() {
        int i = k_ - 1;
        while (i >= 0 && idx_[i] == n_ - k_ + i) --i;
        if (i < 0) {
            done_ = true;
            return;
        }
        ++idx_[i];
        for (int j = i + 1; j < k_; ++j) idx_[j] = idx_[j - 1] + 1;
    }

private:
    int n_, k_;
    std::vector<int> idx_;
    bool done_ = false;
};

// Chart between ambient coordinates and intrinsic coordinates of an
// affine subspace: y solves Gram * y = B^T (x - base).
struct Chart {
    AffineSubspace aff;
    RatMatrix gram;

    explicit Chart(AffineSubspace a) : aff(std::move(a)) {
        const int r = aff.dim();
        gram.assign(r, RatVector(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) gram[i][j] = dot(aff.basis[i], aff.basis[j]);
    }

    RatVector to_intrinsic(const RatVector& x) const {
        const int r = aff.dim();
        RatVector rhs(r);
        RatVector diff = sub(x, aff.base);
        for (int i = 0; i < r; ++i) rhs[i] = dot(aff.basis[i], diff);
        auto y = solve_unique(gram, rhs, r);
        if (!y) throw TheoremViolationError("degenerate Gram matrix");
        return *y;
    }

    // Lift an intrinsic normal m to an ambient normal in the direction
    // space: n = B Gram^{-1} m, so that <n, base + B y> = <m, y> + <n, base>.
    RatVector lift_normal(const RatVector& m) const {
        auto z = solve_unique(gram, m, aff.dim());
        if (!z) throw TheoremViolationError("degenerate Gram matrix");
        RatVector n = zero_vec(aff.ambient_dim());
        for (int i = 0; i < aff.dim(); ++i) n = add(n, scale((*z)[i], aff.basis[i]));
        return n;
    }
};

struct CanonicalKeyLess {
    bool operator()(const RatVector& a, const RatVector& b) const {
        return lex_less(a, b);
    }
};

}  // namespace

std::vector<int> face_vertex_list(const Face& F) { return set_bits(F.verts); }

// ---------------------------------------------------------------------------
// FaceLattice

FaceId FaceLattice::locate(const VertexSet& verts) const {
    auto it = index_.find(verts);
    if (it == index_.end())
        throw LatticeCorruptionError("vertex set is not a face of the lattice");
    return it->second;
}

bool FaceLattice::is_face(const VertexSet& verts) const {
    return index_.count(verts) > 0;
}

std::vector<long long> FaceLattice::f_vector() const {
    std::vector<long long> f;
    f.reserve(by_rank_.size());
    for (const auto& rankfaces : by_rank_)
        f.push_back(static_cast<long long>(rankfaces.size()));
    return f;
}

std::vector<FaceId> FaceLattice::middle_faces(FaceId low, FaceId high) const {
    if (high.rank != low.rank + 2)
        throw LatticeCorruptionError("middle_faces: interval is not rank 2");
    const Face& top = face(high);
    std::vector<FaceId> mids;
    for (int idx : covers_up(low)) {
        FaceId mid{low.rank + 1, idx};
        if (face(mid).verts.is_subset_of(top.verts)) mids.push_back(mid);
    }
    return mids;
}

// ---------------------------------------------------------------------------
// Polytope basics

bool Polytope::contains(const RatVector& p) const {
    if (static_cast<int>(p.size()) != ambient_dim_)
        throw DimensionMismatchError("contains: point of wrong dimension");
    for (const auto& [a, b] : equations_)
        if (dot(a, p) != b) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, p) > f.offset) return false;
    return true;
}

int Polytope::face_dim(const VertexSet& verts) const {
    auto ids = set_bits(verts);
    if (ids.empty()) return -1;
    std::vector<RatVector> diffs;
    for (std::size_t i = 1; i < ids.size(); ++i)
        diffs.push_back(sub(vertices_[ids[i]], vertices_[ids[0]]));
    return rank(diffs);
}

Face Polytope::face_from_tight_facets(const std::vector<int>& tight) const {
    Face F;
    if (tight.empty()) {
        F.verts = all_vertices_set();
    } else {
        F.verts = incidence_[tight[0]];
        for (std::size_t i = 1; i < tight.size(); ++i) F.verts &= incidence_[tight[i]];
    }
    F.dim = face_dim(F.verts);
    return F;
}

struct Polytope::LatticeCache {
    std::once_flag once;
    std::shared_ptr<const FaceLattice> lat;
};

// ---------------------------------------------------------------------------
// hull

Polytope hull(const std::vector<RatVector>& points) {
    if (points.empty()) throw EmptyInputError("hull of an empty point set");
    const int d = static_cast<int>(points[0].size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            throw DimensionMismatchError("hull: points of mixed dimension");

    std::vector<RatVector> pts = points;
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Chart chart(AffineSubspace::from_points(pts));
    const int r = chart.aff.dim();

    Polytope P;
    P.ambient_dim_ = d;
    P.intrinsic_dim_ = r;
    P.equations_ = chart.aff.equations();

    if (r == 0) {
        P.vertices_ = {pts[0]};
        P.lattice_cache_ = std::make_shared<Polytope::LatticeCache>();
        return P;
    }

    const int n = static_cast<int>(pts.size());
    std::vector<RatVector> Y(n);
    for (int i = 0; i < n; ++i) Y[i] = chart.to_intrinsic(pts[i]);

    // Candidate hyperplanes through affinely independent r-subsets, kept
    // when all points lie weakly on one side, deduplicated by normalized
    // (normal | offset).
    std::map<RatVector, std::pair<RatVector, Rational>, CanonicalKeyLess> facet_map;
    for (Combinations comb(n, r); !comb.done(); comb.next()) {
        const auto& S = comb.current();
        std::vector<RatVector> diffs;
        diffs.reserve(r - 1);
        for (int i = 1; i < r; ++i) diffs.push_back(sub(Y[S[i]], Y[S[0]]));
        auto ns = nullspace(diffs, r);
        if (ns.size() != 1) continue;  // subset not affinely independent
        RatVector m = ns[0];
        Rational c = dot(m, Y[S[0]]);
        bool above = false, below = false;
        for (int i = 0; i < n && !(above && below); ++i) {
            const Rational v = dot(m, Y[i]);
            if (v > c)
                above = true;
            else if (v < c)
                below = true;
        }
        if (above && below) continue;
        if (above) {
            for (auto& x : m) x = -x;
            c = -c;
        }
        RatVector key = m;
        key.push_back(c);
        key = canonical_scale(key);
        Rational kc = key.back();
        RatVector km(key.begin(), key.end() - 1);
        facet_map.emplace(std::move(key), std::make_pair(std::move(km), std::move(kc)));
    }
    if (facet_map.empty())
        throw TheoremViolationError("no facets found for a positive-dimensional hull");

    std::vector<std::pair<RatVector, Rational>> ifacets;
    ifacets.reserve(facet_map.size());
    for (auto& [k, f] : facet_map) ifacets.push_back(f);

    // A point is a vertex iff its tight facet normals span the whole
    // intrinsic space.
    std::vector<int> vert_ids;
    for (int i = 0; i < n; ++i) {
        std::vector<RatVector> tight;
        for (const auto& [m, c] : ifacets)
            if (dot(m, Y[i]) == c) tight.push_back(m);
        if (static_cast<int>(tight.size()) >= r && rank(tight) == r)
            vert_ids.push_back(i);
    }

    P.vertices_.reserve(vert_ids.size());
    for (int i : vert_ids) P.vertices_.push_back(pts[i]);  // already lex sorted

    // Lift facet inequalities to ambient coordinates and order canonically.
    std::vector<std::pair<FacetIneq, VertexSet>> lifted;
    for (const auto& [m, c] : ifacets) {
        FacetIneq f;
        f.normal = chart.lift_normal(m);
        f.offset = c + dot(f.normal, chart.aff.base);
        RatVector key = f.normal;
        key.push_back(f.offset);
        key = canonical_scale(key);
        f.offset = key.back();
        key.pop_back();
        f.normal = key;
        VertexSet inc(P.vertices_.size());
        for (std::size_t v = 0; v < P.vertices_.size(); ++v)
            if (dot(f.normal, P.vertices_[v]) == f.offset) inc.set(v);
        lifted.emplace_back(std::move(f), std::move(inc));
    }
    std::sort(lifted.begin(), lifted.end(), [](const auto& a, const auto& b) {
        RatVector ka = a.first.normal, kb = b.first.normal;
        ka.push_back(a.first.offset);
        kb.push_back(b.first.offset);
        return lex_less(ka, kb);
    });
    for (auto& [f, inc] : lifted) {
        P.facets_.push_back(std::move(f));
        P.incidence_.push_back(std::move(inc));
    }

    // Every facet must be tight on an affinely (r-1)-dimensional vertex set.
    for (const auto& inc : P.incidence_)
        if (P.face_dim(inc) != r - 1)
            throw TheoremViolationError("facet with degenerate vertex set");

    P.lattice_cache_ = std::make_shared<Polytope::LatticeCache>();
    return P;
}

// ---------------------------------------------------------------------------
// Face lattice construction: bottom-up closure over vertex-facet incidence.

using FacetSet = boost::dynamic_bitset<>;

struct FaceLatticeBuilder {
    static std::shared_ptr<const FaceLattice> build(const Polytope& P);
};

std::shared_ptr<const FaceLattice> FaceLatticeBuilder::build(const Polytope& P) {
    const int n = P.n_vertices();
    const int m = P.n_facets();
    const int dim = P.dim();

    std::vector<FacetSet> vertex_facets(n, FacetSet(std::max(m, 1)));
    for (int f = 0; f < m; ++f)
        for (int v = 0; v < n; ++v)
            if (P.incident(f, v)) vertex_facets[v].set(f);

    auto closure = [&](const VertexSet& S) {
        // Facets containing S, then the vertices on all of those facets.
        FacetSet FS(std::max(m, 1));
        FS.set();
        for (auto v = S.find_first(); v != VertexSet::npos; v = S.find_next(v))
            FS &= vertex_facets[v];
        if (m == 0 || FS.none()) return P.all_vertices_set();
        VertexSet out(n);
        for (int v = 0; v < n; ++v)
            if (FS.is_subset_of(vertex_facets[v])) out.set(v);
        return out;
    };

    std::set<VertexSet> seen;
    std::vector<VertexSet> queue;
    for (int v = 0; v < n; ++v) {
        VertexSet s(n);
        s.set(v);
        VertexSet c = closure(s);
        if (seen.insert(c).second) queue.push_back(c);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        VertexSet S = queue[qi];
        for (int v = 0; v < n; ++v) {
            if (S.test(v)) continue;
            VertexSet T = S;
            T.set(v);
            T = closure(T);
            if (seen.insert(T).second) queue.push_back(T);
        }
    }
    seen.insert(P.all_vertices_set());

    auto lat = std::make_shared<FaceLattice>();
    lat->by_rank_.assign(dim + 2, {});
    lat->by_rank_[0].push_back(Face{VertexSet(n), -1});  // empty face
    for (const auto& S : seen) {
        Face F{S, P.face_dim(S)};
        if (F.dim < 0 || (F.dim == dim && S != P.all_vertices_set()))
            throw LatticeCorruptionError("closure produced an invalid face");
        lat->by_rank_.at(F.dim + 1).push_back(std::move(F));
    }
    for (auto& rankfaces : lat->by_rank_)
        std::sort(rankfaces.begin(), rankfaces.end(),
                  [](const Face& a, const Face& b) { return face_verts_less(a.verts, b.verts); });
    for (int rk = -1; rk <= dim; ++rk)
        for (std::size_t i = 0; i < lat->by_rank_[rk + 1].size(); ++i)
            lat->index_[lat->by_rank_[rk + 1][i].verts] = FaceId{rk, static_cast<int>(i)};

    lat->up_.assign(dim + 2, {});
    lat->down_.assign(dim + 2, {});
    for (int rk = -1; rk <= dim; ++rk) {
        lat->up_[rk + 1].assign(lat->by_rank_[rk + 1].size(), {});
        lat->down_[rk + 1].assign(lat->by_rank_[rk + 1].size(), {});
    }
    for (int rk = -1; rk < dim; ++rk) {
        const auto& lows = lat->by_rank_[rk + 1];
        const auto& highs = lat->by_rank_[rk + 2];
        for (std::size_t i = 0; i < lows.size(); ++i)
            for (std::size_t j = 0; j < highs.size(); ++j)
                if (lows[i].verts.is_subset_of(highs[j].verts)) {
                    lat->up_[rk + 1][i].push_back(static_cast<int>(j));
                    lat->down_[rk + 2][j].push_back(static_cast<int>(i));
                }
    }
    return lat;
}

const FaceLattice& Polytope::lattice() const {
    auto& cache = *lattice_cache_;
    std::call_once(cache.once, [&] { cache.lat = FaceLatticeBuilder::build(*this); });
    return *cache.lat;
}

const FaceLattice& face_lattice(const Polytope& P) { return P.lattice(); }

// ---------------------------------------------------------------------------
// Derived operations

Polytope polar(const Polytope& P) {
    if (!P.full_dimensional())
        throw PropernessError("polar requires a full-dimensional polytope");
    std::vector<RatVector> duals;
    duals.reserve(P.n_facets());
    for (const auto& f : P.facets()) {
        if (f.offset <= 0)
            throw PropernessError("polar requires the origin in the interior");
        duals.push_back(scale(Rational(1) / f.offset, f.normal));
    }
    return hull(duals);
}

Rational support_value(const Polytope& P, const RatVector& v) {
    if (static_cast<int>(v.size()) != P.ambient_dim())
        throw DimensionMismatchError("support_value");
    Rational best = dot(P.vertex(0), v);
    for (int i = 1; i < P.n_vertices(); ++i) best = std::max(best, dot(P.vertex(i), v));
    return best;
}

Face face_in_direction(const Polytope& P, const RatVector& v) {
    if (is_zero_vec(v)) throw EmptyInputError("face_in_direction: zero direction");
    const Rational h = support_value(P, v);
    Face F;
    F.verts.resize(P.n_vertices());
    for (int i = 0; i < P.n_vertices(); ++i)
        if (dot(P.vertex(i), v) == h) F.verts.set(i);
    F.dim = P.face_dim(F.verts);
    return F;
}

Face supp(const Polytope& P, const std::vector<RatVector>& points) {
    if (points.empty()) throw EmptyInputError("supp of an empty set");
    for (const auto& p : points)
        if (!P.contains(p))
            throw ContainmentError("supp: point " + vec_to_string(p) +
                                   " outside the polytope");
    std::vector<int> tight;
    for (int f = 0; f < P.n_facets(); ++f) {
        bool all = true;
        for (const auto& p : points)
            if (dot(P.facets()[f].normal, p) != P.facets()[f].offset) {
                all = false;
                break;
            }
        if (all) tight.push_back(f);
    }
    return P.face_from_tight_facets(tight);
}

Face supp(const Polytope& P, const Face& F) {
    std::vector<RatVector> pts;
    for (int v : face_vertex_list(F)) pts.push_back(P.vertex(v));
    return supp(P, pts);
}

Cone normal_cone(const Polytope& P, const Face& F) {
    if (F.verts.none()) throw EmptyInputError("normal cone of the empty face");
    std::vector<RatVector> gens;
    for (int f = 0; f < P.n_facets(); ++f)
        if (F.verts.is_subset_of(P.facet_vertices(f)))
            gens.push_back(canonical_scale(P.facets()[f].normal));

    // Drop generators that are positive combinations of the others.
    for (std::size_t i = 0; i < gens.size();) {
        std::vector<RatVector> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        if (others.empty()) break;
        LinearSystem sys;
        sys.dim = static_cast<int>(others.size());
        for (int c = 0; c < P.ambient_dim(); ++c) {
            RatVector row(others.size());
            for (std::size_t j = 0; j < others.size(); ++j) row[j] = others[j][c];
            sys.add_eq(std::move(row), gens[i][c]);
        }
        for (std::size_t j = 0; j < others.size(); ++j)
            sys.add_ge(unit_vec(static_cast<int>(others.size()), static_cast<int>(j)), 0);
        if (solve_feasibility(sys).feasible)
            gens.erase(gens.begin() + i);
        else
            ++i;
    }
    std::sort(gens.begin(), gens.end(), lex_less);
    return Cone{std::move(gens)};
}

std::vector<RatVector> vertices_of_hrep(
    int dim, const std::vector<std::pair<RatVector, Rational>>& eqs,
    const std::vector<std::pair<RatVector, Rational>>& le_rows) {
    std::vector<std::pair<RatVector, Rational>> rows = eqs;
    rows.insert(rows.end(), le_rows.begin(), le_rows.end());
    auto feasible = [&](const RatVector& x) {
        for (const auto& [a, b] : eqs)
            if (dot(a, x) != b) return false;
        for (const auto& [a, b] : le_rows)
            if (dot(a, x) > b) return false;
        return true;
    };
    std::vector<RatVector> out;
    if (dim == 0) {
        RatVector x;
        if (feasible(x)) out.push_back(x);
        return out;
    }
    const int nrows = static_cast<int>(rows.size());
    for (Combinations comb(nrows, dim); !comb.done(); comb.next()) {
        std::vector<RatVector> lhs;
        std::vector<Rational> rhs;
        for (int ri : comb.current()) {
            lhs.push_back(rows[ri].first);
            rhs.push_back(rows[ri].second);
        }
        auto x = solve_unique(lhs, rhs, dim);
        if (x && feasible(*x)) out.push_back(std::move(*x));
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void check_coord_set(const Polytope& P, const std::vector<int>& J) {
    if (J.empty()) throw EmptyInputError("empty coordinate set");
    for (std::size_t i = 0; i < J.size(); ++i) {
        if (J[i] < 0 || J[i] >= P.ambient_dim())
            throw DimensionMismatchError("coordinate index out of range");
        if (i > 0 && J[i] <= J[i - 1])
            throw DimensionMismatchError("coordinate set must be sorted and unique");
    }
}

RatVector restrict_to(const RatVector& a, const std::vector<int>& J) {
    RatVector r(J.size());
    for (std::size_t i = 0; i < J.size(); ++i) r[i] = a[J[i]];
    return r;
}

}  // namespace

Polytope coordinate_section(const Polytope& P, const std::vector<int>& J) {
    check_coord_set(P, J);
    std::vector<std::pair<RatVector, Rational>> eqs, les;
    for (const auto& [a, b] : P.hull_equations()) eqs.emplace_back(restrict_to(a, J), b);
    for (const auto& f : P.facets()) les.emplace_back(restrict_to(f.normal, J), f.offset);
    auto verts = vertices_of_hrep(static_cast<int>(J.size()), eqs, les);
    if (verts.empty())
        throw EmptyInputError("coordinate section is empty");
    return hull(verts);
}

Polytope coordinate_projection(const Polytope& P, const std::vector<int>& J) {
    check_coord_set(P, J);
    std::vector<RatVector> pts;
    pts.reserve(P.n_vertices());
    for (const auto& v : P.vertices()) pts.push_back(restrict_to(v, J));
    return hull(pts);
}

RatVector LinearMap::apply(const RatVector& x) const {
    RatVector y(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) y[i] = dot(rows[i], x);
    return y;
}

std::pair<Polytope, LinearMap> project_along_edge(const Polytope& P, const Face& E) {
    if (E.dim != 1 || E.verts.count() != 2)
        throw EmptyInputError("project_along_edge: not an edge");
    auto ids = face_vertex_list(E);
    RatVector u = sub(P.vertex(ids[1]), P.vertex(ids[0]));
    const Rational uu = dot(u, u);
    const int d = P.ambient_dim();
    LinearMap map;
    map.rows.assign(d, RatVector(d, Rational(0)));
    for (int i = 0; i < d; ++i) {
        map.rows[i][i] = 1;
        for (int j = 0; j < d; ++j) map.rows[i][j] -= u[i] * u[j] / uu;
    }
    std::vector<RatVector> pts;
    pts.reserve(P.n_vertices());
    for (const auto& v : P.vertices()) pts.push_back(map.apply(v));
    return {hull(pts), std::move(map)};
}

}  // namespace polyflag
