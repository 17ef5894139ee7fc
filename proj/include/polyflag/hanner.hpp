#ifndef POLYFLAG_HANNER_HPP
#define POLYFLAG_HANNER_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "polyflag/polytope.hpp"

namespace polyflag {

/// Simple undirected graph on vertices 0..n-1; no loops or multi-edges.
struct Graph {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // pairs with first < second

    void add_edge(int i, int j);
    bool adjacent(int i, int j) const;
    Graph complement() const;
    Graph induced(const std::vector<int>& verts) const;  // relabels to 0..k-1
    /// Disjoint union; other's vertices are shifted by n.
    Graph disjoint_union(const Graph& other) const;
    bool is_isomorphic_to(const Graph& other) const;  // brute force, n <= 8

    bool operator==(const Graph&) const = default;
    auto operator<=>(const Graph&) const = default;
};

/// True iff no 4 vertices induce a path on 4 vertices; checked by
/// exhaustive 4-subset scan.
bool is_cograph(const Graph& G);

/// Recursive construction tree: a symmetric segment, a polar dual, or a
/// convex hull of two constructions placed in orthogonal coordinate blocks.
struct HannerExpr {
    enum class Kind { Segment, Polar, Join };
    Kind kind = Kind::Segment;
    std::shared_ptr<HannerExpr> left, right;  // Polar uses left only

    int dim() const;

    static HannerExpr segment();
    static HannerExpr polar_of(HannerExpr e);
    static HannerExpr join(HannerExpr a, HannerExpr b);

    /// Grammar: expr := "seg" | "polar(" expr ")" | "join(" expr "," expr ")".
    static HannerExpr parse(const std::string& text);
    std::string str() const;
};

/// Evaluate the construction: Segment -> [-1,1]; Polar -> polar dual;
/// Join -> hull of the operands embedded in consecutive coordinate blocks.
Polytope build_hanner(const HannerExpr& e);

/// Every coordinate projection equals the corresponding coordinate section
/// (compared as canonical polytopes, for every nonempty coordinate set).
bool is_locally_antiblocking(const Polytope& P);

/// Origin strictly inside every facet (requires full-dimensional).
bool is_proper(const Polytope& P);

/// Orthant-wise scaling making every axis support value 1.  Verifies that
/// the result has the same face lattice (f-vector and incidence, under the
/// vertex correspondence); throws PropernessError if some h(+-e_i) <= 0.
Polytope normalize(const Polytope& P);

/// Graph on the coordinates with an edge where the 2-dimensional
/// coordinate section is a box; throws GraphUndefinedError when a section
/// is neither a box nor a diamond with 0 inside.
Graph polytope_graph(const Polytope& P);

/// Hull of all sign vectors whose support induces a clique of G.
Polytope clique_polytope(const Graph& G);

/// True iff no 4-subset induces a path; see is_cograph.
/// (declared above)

/// One normalized polytope per isomorphism class of cograph on d vertices,
/// built through clique_polytope; deterministic order.
std::vector<Polytope> enumerate_hanner_types(int d);

/// All unlabeled simple graphs on d vertices (canonical representatives).
std::vector<Graph> enumerate_graph_classes(int d);

/// Composite test: the coordinate graph is defined and is a cograph, and
/// the polytope is recovered from it as a clique polytope.
bool is_hanner(const Polytope& P);

/// Hull of the full sign-orbit of n_points random positive rational points
/// together with +-e_i, then normalized.  Deterministic in the seed.
Polytope random_unconditional(int d, int n_points, unsigned long long seed);

}  // namespace polyflag

#endif
