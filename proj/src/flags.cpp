#include "polyflag/flags.hpp"

#include <algorithm>
#include <set>

#include "polyflag/exceptions.hpp"

namespace polyflag {

namespace {

void descend(const FaceLattice& lat, Flag& cur, int next_rank,
             std::vector<Flag>& out) {
    if (next_rank > lat.top_dim()) {
        out.push_back(cur);
        return;
    }
    FaceId below = cur.faces[next_rank];  // index next_rank holds rank next_rank - 1
    for (int idx : lat.covers_up(below)) {
        cur.faces[next_rank + 1] = FaceId{next_rank, idx};
        descend(lat, cur, next_rank + 1, out);
    }
}

}  // namespace

std::vector<Flag> enumerate_flags(const Polytope& P) {
    const auto& lat = P.lattice();
    std::vector<Flag> out;
    Flag cur;
    cur.faces.assign(P.dim() + 2, FaceId{});
    cur.faces[0] = lat.empty_face();
    descend(lat, cur, 0, out);
    return out;
}

long long count_flags(const Polytope& P) {
    const auto& lat = P.lattice();
    // Chains from the empty face upward.
    std::vector<std::vector<long long>> cnt(P.dim() + 2);
    cnt[0] = {1};
    for (int rk = 0; rk <= P.dim(); ++rk) {
        cnt[rk + 1].assign(lat.faces_of_dim(rk).size(), 0);
        for (std::size_t low = 0; low < lat.faces_of_dim(rk - 1).size(); ++low)
            for (int up : lat.covers_up(FaceId{rk - 1, static_cast<int>(low)}))
                cnt[rk + 1][up] += cnt[rk][low];
    }
    return cnt[P.dim() + 1].at(0);
}

FlagsBySign count_flags_by_sign(const Polytope& P) {
    FlagsBySign out;
    SignOracle oracle(P);
    for (const auto& F : enumerate_flags(P)) {
        SignCone s = flag_sign_scan(oracle, F).sign;
        ++out.per_orthant[s];
        ++out.total;
    }
    long long sum = 0;
    for (const auto& [c, n] : out.per_orthant) {
        if (P.full_dimensional() && c.dim() != P.ambient_dim())
            throw TheoremViolationError(
                "flag of a full-dimensional polytope with non-orthant sign " +
                c.str());
        sum += n;
    }
    if (sum != out.total)
        throw TheoremViolationError("signed flag buckets do not partition");
    return out;
}

Flag flip(const Polytope& P, const Flag& F, int i) {
    if (i < 0 || i > P.dim() - 1)
        throw EmptyInputError("flip index out of range");
    const auto& lat = P.lattice();
    auto mids = lat.middle_faces(F.at_dim(i - 1), F.at_dim(i + 1));
    if (mids.size() != 2)
        throw LatticeCorruptionError(
            "diamond interval with " + std::to_string(mids.size()) +
            " middle faces");
    Flag G = F;
    if (mids[0] == F.at_dim(i))
        G.faces[i + 1] = mids[1];
    else if (mids[1] == F.at_dim(i))
        G.faces[i + 1] = mids[0];
    else
        throw LatticeCorruptionError("flag face missing from its own interval");
    return G;
}

bool check_ladder(const Polytope& P, const Flag& F, int i, int j) {
    if (i < 0 || j < i || j > P.dim() - 1)
        throw EmptyInputError("check_ladder indices out of range");
    const auto& lat = P.lattice();
    Flag G = F;
    for (int k = i; k <= j; ++k) G = flip(P, G, k);
    const VertexSet& fi = lat.face(F.at_dim(i)).verts;
    const VertexSet& gj = lat.face(G.at_dim(j)).verts;
    return !fi.is_subset_of(gj);
}

const ProjectionCache::Entry& ProjectionCache::along_edge(FaceId edge) {
    auto it = cache_.find(edge);
    if (it != cache_.end()) return it->second;
    const Face& E = P_->lattice().face(edge);
    auto [image, map] = project_along_edge(*P_, E);
    return cache_.emplace(edge, Entry{std::move(image), std::move(map)}).first->second;
}

Face unique_projection_edge(const Polytope& P, const Flag& F) {
    ProjectionCache cache(P);
    return unique_projection_edge(P, F, cache);
}

Face unique_projection_edge(const Polytope& P, const Flag& F,
                            ProjectionCache& cache) {
    if (!P.full_dimensional())
        throw PropernessError("unique_projection_edge needs a full-dimensional polytope");
    const int d = P.dim();
    const auto& lat = P.lattice();

    std::vector<FaceId> passing;
    for (int idx : lat.covers_up(F.at_dim(0))) {
        FaceId edge{1, idx};
        const auto& pr = cache.along_edge(edge);
        bool ok = true;
        for (int i = 0; i <= d - 1 && ok; ++i) {
            std::vector<RatVector> pts;
            for (int v : face_vertex_list(lat.face(F.at_dim(i))))
                pts.push_back(pr.map.apply(P.vertex(v)));
            ok = (supp(pr.image, pts).dim == i);
        }
        if (ok) passing.push_back(edge);
    }
    if (passing.size() != 1)
        throw TheoremViolationError(
            "expected exactly one projection edge, found " +
            std::to_string(passing.size()) + " for flag " + flag_to_string(P, F));

    // The surviving edge must match the flip formula (r_1 ... r_{d-1} F)_1.
    Flag G = F;
    for (int k = d - 1; k >= 1; --k) G = flip(P, G, k);
    if (!(G.at_dim(1) == passing[0]))
        throw TheoremViolationError(
            "projection edge disagrees with the flip formula for flag " +
            flag_to_string(P, F));
    return lat.face(passing[0]);
}

Face unique_facet(const Polytope& P, const Flag& F) {
    const int d = P.dim();
    if (d < 1) throw EmptyInputError("unique_facet needs dimension >= 1");
    const auto& lat = P.lattice();
    const VertexSet& v0 = lat.face(F.at_dim(0)).verts;

    std::vector<FaceId> passing;
    for (std::size_t idx = 0; idx < lat.faces_of_dim(d - 1).size(); ++idx) {
        const Face& G = lat.faces_of_dim(d - 1)[idx];
        if (!v0.is_subset_of(G.verts)) continue;
        bool ok = true;
        for (int i = 1; i <= d && ok; ++i) {
            VertexSet T = lat.face(F.at_dim(i)).verts & G.verts;
            if (!lat.is_face(T))
                throw LatticeCorruptionError("face intersection escaped the lattice");
            ok = (lat.locate(T).rank == i - 1);
        }
        if (ok) passing.push_back(FaceId{d - 1, static_cast<int>(idx)});
    }
    if (passing.size() != 1)
        throw TheoremViolationError(
            "expected exactly one cut facet, found " +
            std::to_string(passing.size()) + " for flag " + flag_to_string(P, F));

    Flag G = F;
    for (int k = 1; k <= d - 1; ++k) G = flip(P, G, k);
    if (!(G.at_dim(d - 1) == passing[0]))
        throw TheoremViolationError(
            "cut facet disagrees with the flip formula for flag " +
            flag_to_string(P, F));
    return lat.face(passing[0]);
}

// ---------------------------------------------------------------------------
// FlagEngine

namespace {

RatVector embed_at(const RatVector& x, int p) {
    RatVector y;
    y.reserve(x.size() + 1);
    y.insert(y.end(), x.begin(), x.begin() + p);
    y.push_back(Rational(0));
    y.insert(y.end(), x.begin() + p, x.end());
    return y;
}

RatVector drop_at(const RatVector& x, int p) {
    RatVector y;
    y.reserve(x.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (static_cast<int>(i) != p) y.push_back(x[i]);
    return y;
}

SignCone restrict_cone(const SignCone& C, const std::vector<int>& J) {
    SignCone local;
    local.sigma.reserve(J.size());
    for (int j : J) local.sigma.push_back(C.sigma[j]);
    return local;
}

std::vector<RatVector> face_points(const Polytope& Q, const Face& F) {
    std::vector<RatVector> pts;
    for (int v : face_vertex_list(F)) pts.push_back(Q.vertex(v));
    return pts;
}

// Vertex coordinate sets (sorted) for comparing a face of one polytope
// against an embedded face of another.
std::vector<RatVector> sorted_points(std::vector<RatVector> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    return pts;
}

}  // namespace

FlagEngine::FlagEngine(const Polytope& P) : P_(&P) {
    if (!P.full_dimensional())
        throw PropernessError("flag engine needs a full-dimensional polytope");
    for (const auto& f : P.facets())
        if (f.offset <= 0)
            throw PropernessError("flag engine needs the origin in the interior");
}

const SectionContext& FlagEngine::section(const std::vector<int>& J) {
    auto it = sections_.find(J);
    if (it != sections_.end()) return it->second;

    auto make_section = [&]() -> Polytope {
        if (static_cast<int>(J.size()) == P_->ambient_dim()) return *P_;
        if (J.empty()) return hull({RatVector{}});
        return coordinate_section(*P_, J);
    };
    // The oracle keeps a pointer into the stored context, so the node must
    // exist before the oracle is built (map nodes do not move).
    SectionContext& ctx =
        sections_.emplace(J, SectionContext{J, make_section(), {}, {}, {}, nullptr})
            .first->second;
    try {
        if (!ctx.section.full_dimensional())
            throw TheoremViolationError(
                "coordinate section is not full-dimensional in its subspace");
        for (const auto& f : ctx.section.facets())
            if (f.offset <= 0)
                throw TheoremViolationError("coordinate section is not proper");

        ctx.oracle = std::make_shared<SignOracle>(ctx.section);
        ctx.flags = enumerate_flags(ctx.section);
        ctx.signs.reserve(ctx.flags.size());
        for (std::size_t i = 0; i < ctx.flags.size(); ++i) {
            SignCone s = flag_sign_scan(*ctx.oracle, ctx.flags[i]).sign;
            ctx.by_sign[s.code()].push_back(static_cast<int>(i));
            ctx.signs.push_back(std::move(s));
        }
    } catch (...) {
        sections_.erase(J);
        throw;
    }
    return ctx;
}

std::vector<Flag> FlagEngine::signed_flags(const SignCone& C) {
    const auto J = C.support();
    const SectionContext& ctx = section(J);
    SignCone local = restrict_cone(C, J);
    std::vector<Flag> out;
    auto it = ctx.by_sign.find(local.code());
    if (it != ctx.by_sign.end())
        for (int i : it->second) out.push_back(ctx.flags[i]);
    return out;
}

FaceId FlagEngine::compute_h(const SectionContext& ctxD, const SectionContext& ctxC,
                             int p, int s, FaceId fk, PairMemo& memo) {
    if (auto it = memo.h_of.find(fk); it != memo.h_of.end()) return it->second;

    const Polytope& QD = ctxD.section;
    const Polytope& QC = ctxC.section;
    const int m = QD.ambient_dim();

    std::vector<RatVector> pts;
    for (const auto& x : face_points(QC, QC.lattice().face(fk)))
        pts.push_back(embed_at(x, p));
    auto aff = AffineSubspace::from_points(pts);

    // Only facets tight on all of F_k can contain the pushed slab.
    std::vector<int> containing;
    for (int f = 0; f < QD.n_facets(); ++f) {
        const auto& ineq = QD.facets()[f];
        bool tight = true;
        for (const auto& x : pts)
            if (dot(ineq.normal, x) != ineq.offset) {
                tight = false;
                break;
            }
        if (!tight) continue;
        // The facet contains (aff F_k + R_{>=0} n) cap QD iff no point of
        // that set falls strictly inside it.  Variables are (x, t).
        LinearSystem sys;
        sys.dim = m + 1;
        for (const auto& [a, b] : aff.equations()) {
            RatVector row = a;
            row.push_back(-Rational(s) * a[p]);
            sys.add_eq(std::move(row), b);
        }
        sys.add_ge(unit_vec(m + 1, m), 0);  // t >= 0
        for (const auto& g : QD.facets()) {
            RatVector row = g.normal;
            row.push_back(Rational(0));
            sys.add_le(row, g.offset);
        }
        RatVector strict = ineq.normal;
        strict.push_back(Rational(0));
        sys.add_lt(std::move(strict), ineq.offset);
        if (!solve_feasibility(sys).feasible) containing.push_back(f);
    }
    Face H = QD.face_from_tight_facets(containing);
    FaceId hid = QD.lattice().locate(H.verts);
    memo.h_of.emplace(fk, hid);
    return hid;
}

std::pair<Flag, RaiseTrace> FlagEngine::raise_flag(const SignCone& D,
                                                   const SignCone& C,
                                                   const Flag& F) {
    // Identify the coordinate C drops from D and its sign.
    RatVector n_global = inward_normal(C, D);
    int g = 0;
    while (n_global[g] == 0) ++g;
    const int s = D.sigma[g];

    const auto JD = D.support();
    const auto JC = C.support();
    const int m = static_cast<int>(JD.size());
    const int p = static_cast<int>(std::lower_bound(JD.begin(), JD.end(), g) -
                                   JD.begin());

    const SectionContext& ctxD = section(JD);
    const SectionContext& ctxC = section(JC);
    const Polytope& QD = ctxD.section;
    const Polytope& QC = ctxC.section;
    const auto& latD = QD.lattice();
    const auto& latC = QC.lattice();

    PairMemo& memo = pair_memo_[{D.code(), C.code()}];
    if (!memo.checked) {
        // The section of D's section at x_p = 0 must agree with C's
        // section, as must the projection (the anti-blocking law).
        std::vector<int> keep;
        for (int i = 0; i < m; ++i)
            if (i != p) keep.push_back(i);
        if (m >= 2) {
            if (!(coordinate_section(QD, keep) == QC))
                throw TheoremViolationError("nested sections disagree");
            if (!(coordinate_projection(QD, keep) == QC))
                throw TheoremViolationError(
                    "projection differs from section; polytope is not "
                    "locally anti-blocking");
        }
        memo.checked = true;
    }

    if (F.top_dim() != QC.dim())
        throw DimensionMismatchError("flag does not belong to the facet section");
    {
        SignCone local = restrict_cone(C, JC);
        SignCone got = flag_sign_scan(*ctxC.oracle, F).sign;
        if (!(got == local))
            throw TheoremViolationError("input flag does not have sign C");
    }

    const SignCone D_local = restrict_cone(D, JD);

    // H_k for k in [0, m-1], then the dimension breakpoint k0.
    std::vector<FaceId> h(m);
    for (int k = 0; k <= m - 1; ++k)
        h[k] = compute_h(ctxD, ctxC, p, s, F.at_dim(k), memo);
    int k0 = -1;
    for (int k = 0; k <= m - 1; ++k) {
        const int hd = latD.face(h[k]).dim;
        if (hd != k && hd != k + 1)
            throw TheoremViolationError("pushed face of unexpected dimension");
        if (k0 < 0 && hd == k + 1) k0 = k;
        if (k0 >= 0 && hd != k + 1)
            throw TheoremViolationError("pushed-face dimensions not monotone");
        if (k > 0 && !(latD.face(h[k - 1]).verts.is_subset_of(latD.face(h[k]).verts) &&
                       latD.face(h[k - 1]).verts != latD.face(h[k]).verts))
            throw TheoremViolationError("pushed faces fail strict nesting");
    }
    if (k0 < 0)
        throw TheoremViolationError("no dimension jump found along the flag");

    Flag G;
    G.faces.assign(m + 2, FaceId{});
    G.faces[0] = latD.empty_face();
    G.faces[m + 1] = latD.top_face();
    RaiseTrace trace;
    trace.h_faces = h;
    trace.k0 = k0;

    for (int k = 0; k <= m - 1; ++k) {
        FaceId prev = G.faces[k];  // rank k-1
        FaceId chosen;
        if (k < k0) {
            // Here H_k must be F_k itself, re-found as a face of QD.
            std::vector<RatVector> emb;
            for (const auto& x : face_points(QC, latC.face(F.at_dim(k))))
                emb.push_back(embed_at(x, p));
            if (sorted_points(emb) !=
                sorted_points(face_points(QD, latD.face(h[k]))))
                throw TheoremViolationError(
                    "low face differs from its pushed image");
            chosen = h[k];
        } else {
            auto key = std::make_tuple(k, prev, h[k]);
            if (auto it = memo.picked.find(key); it != memo.picked.end()) {
                chosen = it->second;
            } else {
                auto mids = latD.middle_faces(prev, h[k]);
                if (mids.size() != 2)
                    throw LatticeCorruptionError("raise interval not a diamond");
                std::vector<FaceId> hits;
                for (FaceId mid : mids) {
                    bool take;
                    if (k == k0) {
                        // keep the face reaching strictly past lin C on the
                        // D side (the side the inward normal points to)
                        take = false;
                        for (int v : face_vertex_list(latD.face(mid)))
                            if (Rational(s) * QD.vertex(v)[p] > 0) {
                                take = true;
                                break;
                            }
                    } else {
                        // keep the face whose span misses the new axis
                        auto pts = face_points(QD, latD.face(mid));
                        std::vector<RatVector> diffs;
                        for (std::size_t i = 1; i < pts.size(); ++i)
                            diffs.push_back(sub(pts[i], pts[0]));
                        take = !in_span(diffs, unit_vec(m, p));
                    }
                    if (take) hits.push_back(mid);
                }
                if (hits.size() != 1)
                    throw TheoremViolationError(
                        "raise step found " + std::to_string(hits.size()) +
                        " qualifying faces at dimension " + std::to_string(k));
                chosen = hits[0];
                memo.picked.emplace(key, chosen);
            }
        }
        if (!latD.face(prev).verts.is_subset_of(latD.face(chosen).verts))
            throw TheoremViolationError("raised chain is not nested");
        G.faces[k + 1] = chosen;
        trace.g_faces.push_back(chosen);
    }

    // Contract checks: (i) G_k sits in aff F_k + R_{>=0} n, (ii) the new
    // axis is not in lin G_k, (iii) G_k projects back onto F_k.
    for (int k = 0; k <= m - 1; ++k) {
        const Face& Gk = latD.face(G.at_dim(k));
        std::vector<RatVector> emb;
        for (const auto& x : face_points(QC, latC.face(F.at_dim(k))))
            emb.push_back(embed_at(x, p));
        auto aff = AffineSubspace::from_points(emb);
        auto gpts = face_points(QD, Gk);
        for (const auto& u : gpts) {
            if (Rational(s) * u[p] < 0)
                throw TheoremViolationError("raised face leaves the half-slab");
            RatVector flat = u;
            flat[p] = 0;
            if (!aff.contains(flat))
                throw TheoremViolationError("raised face leaves the slab");
        }
        std::vector<RatVector> diffs;
        for (std::size_t i = 1; i < gpts.size(); ++i)
            diffs.push_back(sub(gpts[i], gpts[0]));
        if (in_span(diffs, unit_vec(m, p)))
            throw TheoremViolationError("raised face contains the new axis");
        std::vector<RatVector> dropped;
        for (const auto& u : gpts) {
            RatVector x = u;
            x[p] = 0;
            dropped.push_back(drop_at(x, p));
        }
        Face back = supp(QC, dropped);
        if (!(latC.locate(back.verts) == F.at_dim(k)))
            throw TheoremViolationError("raised face does not project onto its source");
    }

    SignCone got = flag_sign_scan(*ctxD.oracle, G).sign;
    if (!(got == D_local))
        throw TheoremViolationError("raised flag has sign " + got.str() +
                                    " instead of " + D_local.str());
    return {G, trace};
}

FlagEngine::InjectionReport FlagEngine::verify_injection_family() {
    const int d = P_->ambient_dim();
    InjectionReport report;
    report.total_flags = count_flags(*P_);

    std::vector<SignCone> cones = all_sign_cones(d);
    std::stable_sort(cones.begin(), cones.end(),
                     [](const SignCone& a, const SignCone& b) {
                         return a.dim() < b.dim();
                     });

    long long orthant_sum = 0;
    for (const auto& D : cones) {
        if (D.dim() == 0) continue;
        const long long target = static_cast<long long>(signed_flags(D).size());

        std::set<Flag> image;
        long long sources = 0;
        for (const auto& C : cone_facets(D)) {
            std::set<Flag> this_facet;
            for (const auto& F : signed_flags(C)) {
                auto [G, trace] = raise_flag(D, C, F);
                if (!this_facet.insert(G).second)
                    throw TheoremViolationError(
                        "raise map not injective for cones " + C.str() + " -> " +
                        D.str());
                if (!image.insert(G).second)
                    throw TheoremViolationError(
                        "raise images overlap across facets of " + D.str());
                ++sources;
            }
        }
        long long factorial = 1;
        for (int i = 2; i <= D.dim(); ++i) factorial *= i;
        if (target < factorial)
            throw TheoremViolationError("signed flag count " +
                                        std::to_string(target) + " below " +
                                        std::to_string(factorial) + " for cone " +
                                        D.str());
        if (static_cast<long long>(image.size()) != sources || sources > target)
            throw TheoremViolationError("image bookkeeping failed for cone " +
                                        D.str());
        if (D.dim() == d) orthant_sum += target;
        report.rows.push_back(ConeRow{D, target, sources});
    }
    if (orthant_sum != report.total_flags)
        throw TheoremViolationError(
            "orthant signed-flag counts do not partition the flags");
    return report;
}

FlagEngine::InjectionReport verify_injection_family(const Polytope& P) {
    FlagEngine eng(P);
    return eng.verify_injection_family();
}

std::string flag_to_string(const Polytope& P, const Flag& F) {
    const auto& lat = P.lattice();
    std::string out = "[";
    for (std::size_t i = 0; i < F.faces.size(); ++i) {
        if (i) out += ", ";
        out += "[";
        auto ids = face_vertex_list(lat.face(F.faces[i]));
        for (std::size_t j = 0; j < ids.size(); ++j) {
            if (j) out += " ";
            out += std::to_string(ids[j]);
        }
        out += "]";
    }
    out += "]";
    return out;
}

}  // namespace polyflag
