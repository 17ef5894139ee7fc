#ifndef POLYFLAG_POLYTOPE_HPP
#define POLYFLAG_POLYTOPE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "polyflag/linalg.hpp"
#include "polyflag/linsys.hpp"

namespace polyflag {

using VertexSet = boost::dynamic_bitset<>;

/// A face of a polytope, as the set of vertices lying on it, together with
/// its exact dimension.  The empty face has dimension -1 by convention.
struct Face {
    VertexSet verts;
    int dim = -1;

    bool operator==(const Face& o) const { return verts == o.verts; }
};

/// Identifies a face inside a FaceLattice: rank() == dimension of the face.
struct FaceId {
    int rank = -2;  // -1 .. dim(P)
    int idx = -1;

    bool operator==(const FaceId&) const = default;
    auto operator<=>(const FaceId&) const = default;
    bool valid() const { return rank >= -1 && idx >= 0; }
};

/// A maximal chain of faces: faces[k] has dimension k - 1, from the empty
/// face (k = 0) up to the whole polytope (k = dim + 1).
struct Flag {
    std::vector<FaceId> faces;

    int top_dim() const { return static_cast<int>(faces.size()) - 2; }
    FaceId at_dim(int d) const { return faces.at(d + 1); }
    bool operator==(const Flag&) const = default;
    auto operator<=>(const Flag&) const = default;
};

/// The graded face lattice of a polytope: all faces as closed vertex sets,
/// by dimension, with cover relations between consecutive ranks.  Every
/// rank-2 interval contains exactly two middle faces (diamond property).
class FaceLattice {
public:
    int top_dim() const { return static_cast<int>(by_rank_.size()) - 2; }

    const std::vector<Face>& faces_of_dim(int d) const { return by_rank_.at(d + 1); }
    const Face& face(FaceId id) const { return by_rank_.at(id.rank + 1).at(id.idx); }

    FaceId empty_face() const { return {-1, 0}; }
    FaceId top_face() const { return {top_dim(), 0}; }

    /// Faces of rank id.rank + 1 covering id (sorted by index).
    const std::vector<int>& covers_up(FaceId id) const {
        return up_.at(id.rank + 1).at(id.idx);
    }
    /// Faces of rank id.rank - 1 covered by id.
    const std::vector<int>& covers_down(FaceId id) const {
        return down_.at(id.rank + 1).at(id.idx);
    }

    /// Locate a vertex set in the lattice; throws if it is not a face.
    FaceId locate(const VertexSet& verts) const;
    bool is_face(const VertexSet& verts) const;

    /// f-vector (f_{-1}, f_0, ..., f_d) including both non-proper faces.
    std::vector<long long> f_vector() const;

    /// The faces of dimension mid_rank strictly between low and high, where
    /// high.rank == low.rank + 2.  Always exactly two for a polytope.
    std::vector<FaceId> middle_faces(FaceId low, FaceId high) const;

private:
    friend struct FaceLatticeBuilder;
    std::vector<std::vector<Face>> by_rank_;            // index = rank + 1
    std::vector<std::vector<std::vector<int>>> up_;     // cover lists
    std::vector<std::vector<std::vector<int>>> down_;
    std::map<VertexSet, FaceId> index_;
};

/// A facet-defining inequality <normal, x> <= offset.  For polytopes of
/// lower intrinsic dimension the normal lies in the direction space of the
/// affine hull, and the inequality is facet-defining within that hull.
struct FacetIneq {
    RatVector normal;
    Rational offset;
};

/// A polyhedral cone given by generators (positive hull).
struct Cone {
    std::vector<RatVector> generators;
};

/// An exact-arithmetic polytope: irredundant vertices in canonical
/// (lexicographic) order, derived facet inequalities, affine-hull
/// equations, and the facet-by-vertex incidence matrix.  Immutable after
/// construction; the face lattice is computed on first use.
class Polytope {
public:
    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return intrinsic_dim_; }
    bool full_dimensional() const { return intrinsic_dim_ == ambient_dim_; }

    const std::vector<RatVector>& vertices() const { return vertices_; }
    const RatVector& vertex(int i) const { return vertices_.at(i); }
    int n_vertices() const { return static_cast<int>(vertices_.size()); }

    const std::vector<FacetIneq>& facets() const { return facets_; }
    int n_facets() const { return static_cast<int>(facets_.size()); }

    /// Equations <a, x> = b satisfied by every point of the polytope
    /// (empty iff full-dimensional).
    const std::vector<std::pair<RatVector, Rational>>& hull_equations() const {
        return equations_;
    }

    /// Vertices lying on facet f.
    const VertexSet& facet_vertices(int f) const { return incidence_.at(f); }
    bool incident(int facet, int vertex) const { return incidence_.at(facet).test(vertex); }

    /// Exact membership test against equations and facet inequalities.
    bool contains(const RatVector& p) const;

    const FaceLattice& lattice() const;

    /// Polytopes compare equal iff their canonical vertex lists coincide.
    bool operator==(const Polytope& o) const {
        return ambient_dim_ == o.ambient_dim_ && vertices_ == o.vertices_;
    }

    VertexSet all_vertices_set() const {
        VertexSet s(n_vertices());
        s.set();
        return s;
    }

    /// Face as the set of vertices on all facets containing `tight`; the
    /// whole polytope when no facet does.
    Face face_from_tight_facets(const std::vector<int>& tight) const;

    /// Dimension of a vertex subset (rank of differences).
    int face_dim(const VertexSet& verts) const;

private:
    friend Polytope hull(const std::vector<RatVector>& points);
    Polytope() = default;

    int ambient_dim_ = 0;
    int intrinsic_dim_ = -1;
    std::vector<RatVector> vertices_;
    std::vector<FacetIneq> facets_;
    std::vector<std::pair<RatVector, Rational>> equations_;
    std::vector<VertexSet> incidence_;

    // Lazily built face lattice; copies of a polytope share it.
    struct LatticeCache;
    mutable std::shared_ptr<LatticeCache> lattice_cache_;
};

/// Convex hull of a nonempty point set.  Facets are enumerated by scanning
/// candidate hyperplanes through affinely independent subsets; lower
/// dimensional inputs are handled inside their affine hull and lifted back.
Polytope hull(const std::vector<RatVector>& points);

const FaceLattice& face_lattice(const Polytope& P);

/// Polar dual; requires a full-dimensional polytope with the origin in its
/// interior (throws PropernessError otherwise).
Polytope polar(const Polytope& P);

/// h_P(v): exact maximum of <x, v> over P.
Rational support_value(const Polytope& P, const RatVector& v);

/// The face of P whose points achieve support_value(P, v); v nonzero.
Face face_in_direction(const Polytope& P, const RatVector& v);

/// Minimal face containing the given points (all must lie in P, else
/// ContainmentError); equals P when no facet contains them all.
Face supp(const Polytope& P, const std::vector<RatVector>& points);
Face supp(const Polytope& P, const Face& F);

/// Normal cone of a nonempty face: positive hull of the normals of the
/// facets containing it, reduced to an irredundant generator set.
Cone normal_cone(const Polytope& P, const Face& F);

/// P intersected with the coordinate subspace indexed by J (nonempty,
/// 0-based, sorted), re-embedded in R^|J|.
Polytope coordinate_section(const Polytope& P, const std::vector<int>& J);

/// Orthogonal projection onto the coordinate subspace indexed by J,
/// re-embedded in R^|J|.
Polytope coordinate_projection(const Polytope& P, const std::vector<int>& J);

/// An exact linear map (used to transport faces through projections).
struct LinearMap {
    RatMatrix rows;
    RatVector apply(const RatVector& x) const;
};

/// Orthogonal projection of P along the direction of the edge E onto the
/// hyperplane through the origin orthogonal to it.  E must be a 1-face.
std::pair<Polytope, LinearMap> project_along_edge(const Polytope& P, const Face& E);

/// Vertices (basic feasible solutions) of { x : eqs hold, ineqs hold },
/// which must be bounded.  Helper shared by sections and related routines.
std::vector<RatVector> vertices_of_hrep(
    int dim, const std::vector<std::pair<RatVector, Rational>>& eqs,
    const std::vector<std::pair<RatVector, Rational>>& le_rows);

/// Vertex indices of P whose coordinates make up the face's vertex set,
/// as a sorted list (convenience for reporting).
std::vector<int> face_vertex_list(const Face& F);

}  // namespace polyflag

#endif
