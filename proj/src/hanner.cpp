#include "polyflag/hanner.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "polyflag/exceptions.hpp"

namespace polyflag {

void Graph::add_edge(int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n)
        throw EmptyInputError("invalid edge");
    edges.emplace(std::min(i, j), std::max(i, j));
}

bool Graph::adjacent(int i, int j) const {
    return edges.count({std::min(i, j), std::max(i, j)}) > 0;
}

Graph Graph::complement() const {
    Graph c;
    c.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!adjacent(i, j)) c.edges.emplace(i, j);
    return c;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph g;
    g.n = static_cast<int>(verts.size());
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (adjacent(verts[a], verts[b])) g.edges.emplace(a, b);
    return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
    Graph g;
    g.n = n + other.n;
    g.edges = edges;
    for (auto [i, j] : other.edges) g.edges.emplace(i + n, j + n);
    return g;
}

bool Graph::is_isomorphic_to(const Graph& other) const {
    if (n != other.n || edges.size() != other.edges.size()) return false;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (auto [i, j] : edges)
            if (!other.adjacent(perm[i], perm[j])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool is_cograph(const Graph& G) {
    // An induced 4-vertex path is the unique 4-vertex graph with 3 edges
    // and degree multiset {1,1,2,2}.
    std::vector<int> sub;
    for (int a = 0; a < G.n; ++a)
        for (int b = a + 1; b < G.n; ++b)
            for (int c = b + 1; c < G.n; ++c)
                for (int d = c + 1; d < G.n; ++d) {
                    Graph H = G.induced({a, b, c, d});
                    if (H.edges.size() != 3) continue;
                    std::vector<int> deg(4, 0);
                    for (auto [i, j] : H.edges) {
                        ++deg[i];
                        ++deg[j];
                    }
                    std::sort(deg.begin(), deg.end());
                    if (deg == std::vector<int>{1, 1, 2, 2}) return false;
                }
    return true;
}

// ---------------------------------------------------------------------------
// Hanner expressions

int HannerExpr::dim() const {
    switch (kind) {
        case Kind::Segment: return 1;
        case Kind::Polar: return left->dim();
        case Kind::Join: return left->dim() + right->dim();
    }
    return 0;
}

HannerExpr HannerExpr::segment() { return HannerExpr{}; }

HannerExpr HannerExpr::polar_of(HannerExpr e) {
    HannerExpr out;
    out.kind = Kind::Polar;
    out.left = std::make_shared<HannerExpr>(std::move(e));
    return out;
}

HannerExpr HannerExpr::join(HannerExpr a, HannerExpr b) {
    HannerExpr out;
    out.kind = Kind::Join;
    out.left = std::make_shared<HannerExpr>(std::move(a));
    out.right = std::make_shared<HannerExpr>(std::move(b));
    return out;
}

namespace {

struct ExprParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what, 1, static_cast<int>(pos) + 1);
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }
    bool word(const char* w) {
        skip_ws();
        std::size_t len = std::string(w).size();
        if (text.compare(pos, len, w) == 0) {
            pos += len;
            return true;
        }
        return false;
    }
    HannerExpr parse_expr() {
        skip_ws();
        if (word("seg")) return HannerExpr::segment();
        if (word("polar")) {
            expect('(');
            HannerExpr inner = parse_expr();
            expect(')');
            return HannerExpr::polar_of(std::move(inner));
        }
        if (word("join")) {
            expect('(');
            HannerExpr a = parse_expr();
            expect(',');
            HannerExpr b = parse_expr();
            expect(')');
            return HannerExpr::join(std::move(a), std::move(b));
        }
        fail("expected 'seg', 'polar' or 'join'");
    }
};

}  // namespace

HannerExpr HannerExpr::parse(const std::string& text) {
    ExprParser p{text};
    HannerExpr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

std::string HannerExpr::str() const {
    switch (kind) {
        case Kind::Segment: return "seg";
        case Kind::Polar: return "polar(" + left->str() + ")";
        case Kind::Join: return "join(" + left->str() + "," + right->str() + ")";
    }
    return "";
}

Polytope build_hanner(const HannerExpr& e) {
    switch (e.kind) {
        case HannerExpr::Kind::Segment:
            return hull({{Rational(-1)}, {Rational(1)}});
        case HannerExpr::Kind::Polar:
            return polar(build_hanner(*e.left));
        case HannerExpr::Kind::Join: {
            Polytope A = build_hanner(*e.left);
            Polytope B = build_hanner(*e.right);
            const int da = A.ambient_dim(), db = B.ambient_dim();
            std::vector<RatVector> pts;
            for (const auto& v : A.vertices()) {
                RatVector x = v;
                x.insert(x.end(), db, Rational(0));
                pts.push_back(std::move(x));
            }
            for (const auto& v : B.vertices()) {
                RatVector x(da, Rational(0));
                x.insert(x.end(), v.begin(), v.end());
                pts.push_back(std::move(x));
            }
            return hull(pts);
        }
    }
    throw EmptyInputError("bad expression");
}

// ---------------------------------------------------------------------------
// Locally anti-blocking machinery

namespace {

std::vector<std::vector<int>> nonempty_subsets(int d) {
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << d); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < d; ++i)
            if (mask >> i & 1) J.push_back(i);
        subsets.push_back(std::move(J));
    }
    return subsets;
}

}  // namespace

bool is_locally_antiblocking(const Polytope& P) {
    const int d = P.ambient_dim();
    for (const auto& J : nonempty_subsets(d)) {
        if (static_cast<int>(J.size()) == d) continue;  // both sides are P
        if (!(coordinate_projection(P, J) == coordinate_section(P, J)))
            return false;
    }
    return true;
}

bool is_proper(const Polytope& P) {
    if (!P.full_dimensional()) return false;
    for (const auto& f : P.facets())
        if (f.offset <= 0) return false;
    return true;
}

Polytope normalize(const Polytope& P) {
    const int d = P.ambient_dim();
    RatVector pos(d), neg(d);
    for (int i = 0; i < d; ++i) {
        pos[i] = support_value(P, unit_vec(d, i, 1));
        neg[i] = support_value(P, unit_vec(d, i, -1));
        if (pos[i] <= 0 || neg[i] <= 0)
            throw PropernessError("normalize: axis support value not positive");
    }
    std::vector<RatVector> pts;
    pts.reserve(P.n_vertices());
    for (const auto& v : P.vertices()) {
        RatVector x(d);
        for (int i = 0; i < d; ++i)
            x[i] = v[i] == 0 ? Rational(0)
                             : (v[i] > 0 ? v[i] / pos[i] : v[i] / neg[i]);
        pts.push_back(std::move(x));
    }
    Polytope Q = hull(pts);

    // The scaling must preserve the combinatorics: same counts, and the
    // facet incidences must match under the vertex correspondence.
    for (int i = 0; i < d; ++i) {
        if (support_value(Q, unit_vec(d, i, 1)) != 1 ||
            support_value(Q, unit_vec(d, i, -1)) != 1)
            throw TheoremViolationError("normalize did not reach unit supports");
    }
    if (Q.n_vertices() != P.n_vertices() || Q.n_facets() != P.n_facets() ||
        Q.lattice().f_vector() != P.lattice().f_vector())
        throw TheoremViolationError("normalize changed the face structure");
    std::vector<int> to_q(P.n_vertices());
    for (int i = 0; i < P.n_vertices(); ++i) {
        bool found = false;
        for (int j = 0; j < Q.n_vertices() && !found; ++j)
            if (Q.vertex(j) == pts[i]) {
                to_q[i] = j;
                found = true;
            }
        if (!found)
            throw TheoremViolationError("normalize lost a vertex");
    }
    std::set<VertexSet> p_facets, q_facets;
    for (int f = 0; f < P.n_facets(); ++f) {
        VertexSet img(Q.n_vertices());
        const VertexSet& src = P.facet_vertices(f);
        for (auto v = src.find_first(); v != VertexSet::npos; v = src.find_next(v))
            img.set(to_q[v]);
        p_facets.insert(img);
        q_facets.insert(Q.facet_vertices(f));
    }
    if (p_facets != q_facets)
        throw TheoremViolationError("normalize permuted the incidence structure");
    return Q;
}

Graph polytope_graph(const Polytope& P) {
    const int d = P.ambient_dim();
    Graph G;
    G.n = d;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Polytope S = coordinate_section(P, {i, j});
            // Classify as a box [a1,b1]x[a2,b2] (all four corner vertices
            // off the axes) or a diamond (all four vertices on the axes),
            // in both cases with 0 inside.
            bool box = false, diamond = false;
            if (S.dim() == 2 && S.n_vertices() == 4) {
                std::set<Rational> xs, ys;
                bool corners = true, on_axes = true;
                for (const auto& v : S.vertices()) {
                    xs.insert(v[0]);
                    ys.insert(v[1]);
                    if (v[0] == 0 || v[1] == 0) corners = false;
                    if (v[0] != 0 && v[1] != 0) on_axes = false;
                }
                const bool zero_inside =
                    *xs.begin() < 0 && *xs.rbegin() > 0 && *ys.begin() < 0 &&
                    *ys.rbegin() > 0;
                box = corners && xs.size() == 2 && ys.size() == 2 && zero_inside;
                diamond = on_axes && zero_inside;
            }
            if (box)
                G.edges.emplace(i, j);
            else if (!diamond)
                throw GraphUndefinedError(
                    "coordinate section {" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + "} is neither axis-aligned nor a diamond");
        }
    return G;
}

Polytope clique_polytope(const Graph& G) {
    const int n = G.n;
    if (n <= 0) throw EmptyInputError("clique polytope of an empty graph");
    // Only sign vectors supported on *maximal* cliques can be vertices;
    // the rest are midpoints of extensions.  Singletons and smaller cliques
    // are absorbed automatically.
    std::vector<int> maximal;
    for (int mask = 1; mask < (1 << n); ++mask) {
        bool clique = true;
        for (int i = 0; i < n && clique; ++i)
            for (int j = i + 1; j < n && clique; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && !G.adjacent(i, j))
                    clique = false;
        if (!clique) continue;
        bool is_maximal = true;
        for (int v = 0; v < n && is_maximal; ++v) {
            if (mask >> v & 1) continue;
            bool extends = true;
            for (int i = 0; i < n && extends; ++i)
                if ((mask >> i & 1) && !G.adjacent(i, v)) extends = false;
            if (extends) is_maximal = false;
        }
        if (is_maximal) maximal.push_back(mask);
    }
    std::vector<RatVector> pts;
    for (int mask : maximal) {
        std::vector<int> coords;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) coords.push_back(i);
        for (int signs = 0; signs < (1 << coords.size()); ++signs) {
            RatVector x(n, Rational(0));
            for (std::size_t k = 0; k < coords.size(); ++k)
                x[coords[k]] = (signs >> k & 1) ? -1 : 1;
            pts.push_back(std::move(x));
        }
    }
    return hull(pts);
}

std::vector<Graph> enumerate_graph_classes(int d) {
    std::vector<Graph> classes;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) slots.emplace_back(i, j);
    for (int mask = 0; mask < (1 << slots.size()); ++mask) {
        Graph G;
        G.n = d;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1) G.edges.insert(slots[k]);
        bool seen = false;
        for (const auto& H : classes)
            if (G.is_isomorphic_to(H)) {
                seen = true;
                break;
            }
        if (!seen) classes.push_back(std::move(G));
    }
    return classes;
}

std::vector<Polytope> enumerate_hanner_types(int d) {
    if (d < 1 || d > 6) throw EmptyInputError("enumerate_hanner_types: 1 <= d <= 6");
    std::vector<Polytope> out;
    for (const auto& G : enumerate_graph_classes(d))
        if (is_cograph(G)) out.push_back(clique_polytope(G));
    return out;
}

bool is_hanner(const Polytope& P) {
    Graph G = polytope_graph(P);  // may throw GraphUndefinedError
    if (!is_cograph(G)) return false;
    return clique_polytope(G) == P;
}

Polytope random_unconditional(int d, int n_points, unsigned long long seed) {
    if (d < 1 || d > 5) throw EmptyInputError("random_unconditional: 1 <= d <= 5");
    std::mt19937_64 gen(seed);
    auto uniform = [&](int lo, int hi) {
        return lo + static_cast<int>(gen() % static_cast<unsigned long long>(hi - lo + 1));
    };
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<RatVector> pts;
        for (int i = 0; i < d; ++i) {
            pts.push_back(unit_vec(d, i, 1));
            pts.push_back(unit_vec(d, i, -1));
        }
        for (int k = 0; k < n_points; ++k) {
            RatVector p(d);
            for (int i = 0; i < d; ++i) {
                int den = uniform(2, 6);
                p[i] = Rational(uniform(1, 2 * den), den);
            }
            for (int mask = 0; mask < (1 << d); ++mask) {
                RatVector q(d);
                for (int i = 0; i < d; ++i) q[i] = (mask >> i & 1) ? -p[i] : p[i];
                pts.push_back(std::move(q));
            }
        }
        Polytope P = hull(pts);
        if (P.dim() != d) continue;  // cannot happen with the axis points
        if (!is_locally_antiblocking(P))
            throw TheoremViolationError(
                "sign-orbit hull failed the anti-blocking check");
        return normalize(P);
    }
    throw EmptyInputError("random_unconditional: repeated degenerate draws");
}

}  // namespace polyflag
