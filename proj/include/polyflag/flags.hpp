#ifndef POLYFLAG_FLAGS_HPP
#define POLYFLAG_FLAGS_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polyflag/fan.hpp"
#include "polyflag/polytope.hpp"

namespace polyflag {

/// All maximal chains of the face lattice, by depth-first descent over
/// cover relations, in the deterministic order induced by sorting each
/// rank lexicographically by vertex set.
std::vector<Flag> enumerate_flags(const Polytope& P);

/// Chain-counting over the cover relations (independent of enumeration).
long long count_flags(const Polytope& P);

/// Per-orthant signed flag counts of a full-dimensional polytope, plus the
/// total; the buckets partition the flags.
struct FlagsBySign {
    long long total = 0;
    std::map<SignCone, long long> per_orthant;
};
FlagsBySign count_flags_by_sign(const Polytope& P);

/// The unique flag differing from F exactly in dimension i, via the
/// diamond property on [F_{i-1}, F_{i+1}].
Flag flip(const Polytope& P, const Flag& F, int i);

/// Computes r_j ... r_{i+1} r_i F and reports whether F_i is *not*
/// contained in its j-face.  Always true; callers treat false as a
/// counterexample.
bool check_ladder(const Polytope& P, const Flag& F, int i, int j);

/// Memoizes the projection of P along each edge (shared across the flags
/// through that edge).
class ProjectionCache {
public:
    explicit ProjectionCache(const Polytope& P) : P_(&P) {}
    struct Entry {
        Polytope image;
        LinearMap map;
    };
    const Entry& along_edge(FaceId edge);
    const Polytope& polytope() const { return *P_; }

private:
    const Polytope* P_;
    std::map<FaceId, Entry> cache_;
};

/// The unique edge E containing F_0 such that pushing every face of F
/// through the projection along E gives a flag of the image; also checks
/// E = (r_1 r_2 ... r_{d-1} F)_1.  Zero or two qualifying edges raise
/// TheoremViolationError.
Face unique_projection_edge(const Polytope& P, const Flag& F);
Face unique_projection_edge(const Polytope& P, const Flag& F, ProjectionCache& cache);

/// The unique facet G containing F_0 such that (F_i cap G)_i is a flag of
/// G; also checks G = (r_{d-1} ... r_1 F)_{d-1}.
Face unique_facet(const Polytope& P, const Flag& F);

/// Intermediate data of one sign-raising step: the faces H_k spanned by
/// pushing each flag face along the new coordinate, the breakpoint k0
/// where their dimension jumps, and the chosen faces G_k.
struct RaiseTrace {
    std::vector<FaceId> h_faces;
    int k0 = -1;
    std::vector<FaceId> g_faces;
};

/// A coordinate section of the base polytope together with its flags and
/// their signs, all in the section's own coordinates.
struct SectionContext {
    std::vector<int> coords;  // global coordinate ids, sorted
    Polytope section;         // embedded in R^{coords.size()}
    std::vector<Flag> flags;
    std::vector<SignCone> signs;                  // sign of each flag (local)
    std::map<int, std::vector<int>> by_sign;      // local cone code -> flag indices
    std::shared_ptr<SignOracle> oracle;
};

/// Signed-flag machinery over one proper locally anti-blocking polytope:
/// memoizes coordinate sections, their flag signs, and the sign-raising
/// data, and runs the injection-family verification.
class FlagEngine {
public:
    explicit FlagEngine(const Polytope& P);

    const Polytope& polytope() const { return *P_; }

    /// Section P cap R^J (J sorted global coordinate ids; may be empty,
    /// giving the origin as a 0-dimensional polytope).
    const SectionContext& section(const std::vector<int>& J);

    /// Flags of P cap lin(C) whose sign is exactly C, as flags of
    /// section(support(C)).
    std::vector<Flag> signed_flags(const SignCone& C);

    /// One sign-raising step: lifts F from the section of a facet C of D
    /// to a signed flag of the section of D, following the slab/diamond
    /// construction, and verifies the three contract properties and the
    /// resulting sign.  Every forced choice along the way is asserted.
    std::pair<Flag, RaiseTrace> raise_flag(const SignCone& D, const SignCone& C,
                                           const Flag& F);

    struct ConeRow {
        SignCone cone;
        long long signed_count = 0;
        long long raised_total = 0;  // images accumulated over all facets
    };
    struct InjectionReport {
        std::vector<ConeRow> rows;  // by (dim, code), dimensions >= 1
        long long total_flags = 0;
    };

    /// For every cone D by increasing dimension and every facet C of D:
    /// raises all of signedflags(C), asserting injectivity, pairwise
    /// disjointness of the images across facets, membership of every image
    /// in signedflags(D), and the factorial lower bound.  Throws
    /// TheoremViolationError with a witness on any failure.
    InjectionReport verify_injection_family();

private:
    struct PairMemo {
        bool checked = false;
        std::map<FaceId, FaceId> h_of;
        std::map<std::tuple<int, FaceId, FaceId>, FaceId> picked;
    };

    FaceId compute_h(const SectionContext& ctxD, const SectionContext& ctxC,
                     int p, int s, FaceId fk, PairMemo& memo);

    const Polytope* P_;
    std::map<std::vector<int>, SectionContext> sections_;
    std::map<std::pair<int, int>, PairMemo> pair_memo_;
};

/// Convenience wrapper: builds a FlagEngine and runs the verification.
FlagEngine::InjectionReport verify_injection_family(const Polytope& P);

/// Serialize a flag as its faces' vertex-index lists (ascending dimension,
/// empty face included), against the canonical vertex order.
std::string flag_to_string(const Polytope& P, const Flag& F);

}  // namespace polyflag

#endif
