#ifndef POLYFLAG_FAN_HPP
#define POLYFLAG_FAN_HPP

#include <map>
#include <string>
#include <vector>

#include "polyflag/polytope.hpp"

namespace polyflag {

/// A cone of the standard fan, encoded by its sign vector:
///   { x : sigma_i * x_i >= 0 where sigma_i != 0,  x_i = 0 where sigma_i = 0 }.
/// Its dimension is the number of nonzero entries; the 2^d full-dimensional
/// cones are the orthants.
struct SignCone {
    std::vector<int8_t> sigma;

    int ambient_dim() const { return static_cast<int>(sigma.size()); }
    int dim() const;
    bool is_zero_cone() const { return dim() == 0; }

    bool contains(const RatVector& p) const;
    bool subset_of(const SignCone& other) const;
    SignCone meet(const SignCone& other) const;  // intersection of cones

    /// Coordinates with nonzero sign, sorted.
    std::vector<int> support() const;

    /// Base-3 code, used as a dense cache key.
    int code() const;

    /// Serialized as a string over {+,-,0}, e.g. "+-0+".
    std::string str() const;
    static SignCone parse(const std::string& text);

    bool operator==(const SignCone&) const = default;
    auto operator<=>(const SignCone&) const = default;
};

/// All 3^d cones of the standard fan, ordered by base-3 code with
/// digits {-,0,+} -> {0,1,2}.
std::vector<SignCone> all_sign_cones(int d);

/// The 2^d orthants only.
std::vector<SignCone> all_orthants(int d);

/// Minimal standard-fan cone containing p: sigma_i = sign(p_i).
SignCone supp_fan(const RatVector& p);

/// The dim(D) facets of D, obtained by zeroing one nonzero entry.
/// Throws EmptyInputError for the zero cone.
std::vector<SignCone> cone_facets(const SignCone& D);

/// For a facet C of D (zeroed coordinate i carrying D's sign s): s * e_i,
/// the unit normal to C on the D side.
RatVector inward_normal(const SignCone& C, const SignCone& D);

/// The sign vector read as a point (sum of the generating unit vectors).
RatVector one_vector(const SignCone& C);

/// Exact test of relint(F) meeting the closed cone C, via strict
/// feasibility; cheap sign bounds and a barycenter check short-circuit
/// most calls.
bool relint_face_meets_cone(const Polytope& P, const Face& F, const SignCone& C);

/// relint(F) against the *relative interior* of C (strict signs on the
/// support of C).
bool relint_face_meets_relint_cone(const Polytope& P, const Face& F,
                                   const SignCone& C);

/// Caches the relint-meets-cone predicate per (face, cone); flags of one
/// polytope share most faces, so sign scans hit the cache heavily.
class SignOracle {
public:
    explicit SignOracle(const Polytope& P) : P_(&P) {}

    const Polytope& polytope() const { return *P_; }
    bool relint_meets(FaceId f, const SignCone& C);

private:
    const Polytope* P_;
    std::map<std::pair<std::pair<int, int>, int>, bool> cache_;  // ((rank, idx), code)
};

struct FlagSignResult {
    SignCone sign;
    std::vector<SignCone> kept;  // every fan cone meeting all relints
};

/// The sign of a flag: scans all 3^d cones, keeps those meeting the
/// relative interior of every face of the flag, checks the kept set is
/// closed under pairwise intersection, and returns the intersection of the
/// kept set (itself a kept cone).  Violations of these guaranteed facts
/// raise TheoremViolationError.
FlagSignResult flag_sign_scan(SignOracle& oracle, const Flag& F);
SignCone flag_sign(const Polytope& P, const Flag& F);

}  // namespace polyflag

#endif
