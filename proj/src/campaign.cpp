#include "polyflag/campaign.hpp"

#include <algorithm>
#include <sstream>

#include "polyflag/exceptions.hpp"

namespace polyflag {

const std::vector<CheckKind>& all_checks() {
    static const std::vector<CheckKind> checks = {
        CheckKind::FlagBound,   CheckKind::EqualityIffHanner,
        CheckKind::Ladder,      CheckKind::UniqueEdge,
        CheckKind::UniqueFacet, CheckKind::Injections,
        CheckKind::GraphLaws,   CheckKind::Prop25,
        CheckKind::MinDownwards};
    return checks;
}

std::string check_name(CheckKind c) {
    switch (c) {
        case CheckKind::FlagBound: return "flag-bound";
        case CheckKind::EqualityIffHanner: return "equality-iff-hanner";
        case CheckKind::Ladder: return "ladder";
        case CheckKind::UniqueEdge: return "unique-edge";
        case CheckKind::UniqueFacet: return "unique-facet";
        case CheckKind::Injections: return "injections";
        case CheckKind::GraphLaws: return "graph-laws";
        case CheckKind::Prop25: return "prop-2-5";
        case CheckKind::MinDownwards: return "min-downwards";
    }
    return "?";
}

std::optional<CheckKind> parse_check(const std::string& name) {
    for (CheckKind c : all_checks())
        if (check_name(c) == name) return c;
    return std::nullopt;
}

int check_exit_code(CheckKind c) { return 2 + static_cast<int>(c); }

std::string generator_name(GeneratorKind g) {
    switch (g) {
        case GeneratorKind::Hanner: return "hanner";
        case GeneratorKind::CliquePolytope: return "clique-polytope";
        case GeneratorKind::Unconditional: return "unconditional";
        case GeneratorKind::File: return "file";
    }
    return "?";
}

std::optional<GeneratorKind> parse_generator(const std::string& name) {
    for (GeneratorKind g : {GeneratorKind::Hanner, GeneratorKind::CliquePolytope,
                            GeneratorKind::Unconditional, GeneratorKind::File})
        if (generator_name(g) == name) return g;
    return std::nullopt;
}

long long flag_bound(int d) {
    long long b = 1;
    for (int i = 1; i <= d; ++i) b *= 2 * i;
    return b;
}

namespace {

std::string graph_label(const Graph& G) {
    std::ostringstream os;
    os << "n=" << G.n << " edges={";
    bool first = true;
    for (auto [a, b] : G.edges) {
        if (!first) os << ",";
        os << (a + 1) << "-" << (b + 1);
        first = false;
    }
    os << "}";
    return os.str();
}

struct Instance {
    std::string label;
    Polytope polytope;
};

std::vector<Instance> make_instances(const CampaignConfig& cfg) {
    std::vector<Instance> out;
    switch (cfg.generator) {
        case GeneratorKind::Hanner:
            for (int d = cfg.dim_min; d <= cfg.dim_max; ++d) {
                auto graphs = enumerate_graph_classes(d);
                int taken = 0;
                for (const auto& G : graphs) {
                    if (!is_cograph(G)) continue;
                    if (cfg.count > 0 && taken >= cfg.count) break;
                    out.push_back({"hanner d=" + std::to_string(d) + " " +
                                       graph_label(G),
                                   clique_polytope(G)});
                    ++taken;
                }
            }
            break;
        case GeneratorKind::CliquePolytope:
            for (int d = cfg.dim_min; d <= cfg.dim_max; ++d) {
                int taken = 0;
                for (const auto& G : enumerate_graph_classes(d)) {
                    if (cfg.count > 0 && taken >= cfg.count) break;
                    out.push_back({"clique-polytope d=" + std::to_string(d) + " " +
                                       graph_label(G),
                                   clique_polytope(G)});
                    ++taken;
                }
            }
            break;
        case GeneratorKind::Unconditional:
            for (int d = cfg.dim_min; d <= cfg.dim_max; ++d) {
                const int n = cfg.count > 0 ? cfg.count : 10;
                for (int i = 0; i < n; ++i) {
                    unsigned long long seed = cfg.seed + static_cast<unsigned long long>(i);
                    int n_points = 1 + i % 2;
                    out.push_back({"unconditional d=" + std::to_string(d) +
                                       " seed=" + std::to_string(seed) +
                                       " points=" + std::to_string(n_points),
                                   random_unconditional(d, n_points, seed)});
                }
            }
            break;
        case GeneratorKind::File:
            for (const auto& path : cfg.files)
                out.push_back({path, polytope_from_json(load_json_file(path))});
            break;
    }
    return out;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

// equality-iff-hanner treats an undefined coordinate graph as "not
// Hanner": a flag minimizer always has box-or-diamond 2-sections, so an
// undefined graph already certifies a non-minimizer.
bool hanner_or_false(const Polytope& P, std::string* note) {
    try {
        return is_hanner(P);
    } catch (const GraphUndefinedError& e) {
        if (note) *note = e.what();
        return false;
    }
}

CheckOutcome run_check(CheckKind kind, const Polytope& P, const FlagsBySign& by_sign) {
    CheckOutcome out;
    const int d = P.ambient_dim();
    const long long bound = flag_bound(d);
    const long long flags = by_sign.total;
    std::ostringstream detail;
    try {
        switch (kind) {
            case CheckKind::FlagBound: {
                long long min_orthant = -1, sum = 0;
                for (const auto& [cone, n] : by_sign.per_orthant) {
                    if (min_orthant < 0 || n < min_orthant) min_orthant = n;
                    sum += n;
                }
                long long dfact = 1;
                for (int i = 2; i <= d; ++i) dfact *= i;
                out.pass = flags >= bound && sum == flags && min_orthant >= dfact;
                detail << "flags=" << flags << " bound=" << bound
                       << " min-orthant=" << min_orthant << " orthant-floor=" << dfact;
                break;
            }
            case CheckKind::EqualityIffHanner: {
                std::string note;
                const bool hanner = hanner_or_false(P, &note);
                const bool minimal = (flags == bound);
                out.pass = (hanner == minimal);
                detail << "flags=" << flags << " bound=" << bound
                       << " hanner=" << bool_word(hanner);
                if (!note.empty()) detail << " (" << note << ")";
                break;
            }
            case CheckKind::Ladder: {
                long long cases = 0;
                for (const auto& F : enumerate_flags(P))
                    for (int i = 0; i <= d - 1; ++i)
                        for (int j = i; j <= d - 1; ++j) {
                            ++cases;
                            if (!check_ladder(P, F, i, j)) {
                                out.pass = false;
                                out.witness = "flag " + flag_to_string(P, F) +
                                              " i=" + std::to_string(i) +
                                              " j=" + std::to_string(j);
                            }
                        }
                detail << "cases=" << cases;
                break;
            }
            case CheckKind::UniqueEdge: {
                ProjectionCache cache(P);
                long long cases = 0;
                for (const auto& F : enumerate_flags(P)) {
                    unique_projection_edge(P, F, cache);
                    ++cases;
                }
                detail << "flags=" << cases;
                break;
            }
            case CheckKind::UniqueFacet: {
                long long cases = 0;
                for (const auto& F : enumerate_flags(P)) {
                    unique_facet(P, F);
                    ++cases;
                }
                detail << "flags=" << cases;
                break;
            }
            case CheckKind::Injections: {
                auto report = verify_injection_family(P);
                long long cones = static_cast<long long>(report.rows.size());
                detail << "cones=" << cones << " flags=" << report.total_flags;
                break;
            }
            case CheckKind::GraphLaws: {
                Graph G = polytope_graph(P);
                Graph Gpolar = polytope_graph(polar(P));
                bool complement_ok = (Gpolar == G.complement());
                bool induced_ok = true;
                for (int mask = 1; mask < (1 << d) && induced_ok; ++mask) {
                    std::vector<int> J;
                    for (int i = 0; i < d; ++i)
                        if (mask >> i & 1) J.push_back(i);
                    if (static_cast<int>(J.size()) < 2 ||
                        static_cast<int>(J.size()) == d)
                        continue;
                    induced_ok =
                        polytope_graph(coordinate_section(P, J)) == G.induced(J);
                }
                bool recover_ok = true, box_verts_ok = true;
                if (flags == bound) {
                    recover_ok = (clique_polytope(G) == P);
                    for (const auto& v : P.vertices())
                        for (const auto& x : v)
                            if (x != 0 && x != 1 && x != -1) box_verts_ok = false;
                }
                out.pass = complement_ok && induced_ok && recover_ok && box_verts_ok;
                detail << "complement=" << bool_word(complement_ok)
                       << " induced=" << bool_word(induced_ok)
                       << " recovered=" << bool_word(recover_ok)
                       << " sign-vertices=" << bool_word(box_verts_ok);
                break;
            }
            case CheckKind::Prop25: {
                // Crossing form: coordinates where kept cones carry opposite
                // strict signs must annihilate the normal cone of the face.
                const auto cones = all_sign_cones(d);
                const auto& lat = P.lattice();
                long long faces_checked = 0;
                for (int rk = 0; rk < P.dim() && out.pass; ++rk)
                    for (const auto& F : lat.faces_of_dim(rk)) {
                        std::vector<char> plus(d, 0), minus(d, 0);
                        for (const auto& C : cones)
                            if (relint_face_meets_relint_cone(P, F, C))
                                for (int i = 0; i < d; ++i) {
                                    if (C.sigma[i] > 0) plus[i] = 1;
                                    if (C.sigma[i] < 0) minus[i] = 1;
                                }
                        auto gens = normal_cone(P, F).generators;
                        for (int i = 0; i < d; ++i) {
                            if (!(plus[i] && minus[i])) continue;
                            for (const auto& g : gens)
                                if (g[i] != 0) {
                                    out.pass = false;
                                    out.witness = "face vertices";
                                    for (int v : face_vertex_list(F))
                                        out.witness += " " + std::to_string(v);
                                    out.witness +=
                                        ", coordinate " + std::to_string(i + 1);
                                }
                        }
                        ++faces_checked;
                    }
                detail << "faces=" << faces_checked;
                break;
            }
            case CheckKind::MinDownwards: {
                if (flags != bound) {
                    detail << "not a minimizer; nothing to verify";
                    break;
                }
                long long sections = 0;
                for (int mask = 1; mask < (1 << d); ++mask) {
                    std::vector<int> J;
                    for (int i = 0; i < d; ++i)
                        if (mask >> i & 1) J.push_back(i);
                    Polytope S = static_cast<int>(J.size()) == d
                                     ? P
                                     : coordinate_section(P, J);
                    if (count_flags(S) != flag_bound(static_cast<int>(J.size()))) {
                        out.pass = false;
                        out.witness = "coordinate set mask " + std::to_string(mask);
                    }
                    ++sections;
                }
                detail << "sections=" << sections;
                break;
            }
        }
    } catch (const EngineError& e) {
        out.pass = false;
        out.witness = e.what();
        detail << " aborted";
    }
    out.detail = detail.str();
    return out;
}

}  // namespace

Report run_campaign(const CampaignConfig& cfg) {
    Report report;
    report.config = cfg;
    const std::vector<CheckKind>& checks =
        cfg.checks.empty() ? all_checks() : cfg.checks;

    std::vector<Instance> instances = make_instances(cfg);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        InstanceReport ir;
        ir.index = static_cast<int>(i);
        ir.label = instances[i].label;
        const Polytope& P = instances[i].polytope;
        ir.dim = P.ambient_dim();

        if (!is_proper(P) || !is_locally_antiblocking(P)) {
            CheckOutcome bad;
            bad.pass = false;
            bad.detail = "instance is not a proper locally anti-blocking polytope";
            for (CheckKind c : checks) ir.checks.emplace_back(check_name(c), bad);
            report.instances.push_back(std::move(ir));
            report.aggregate_pass = false;
            if (report.first_failure_check.empty())
                report.first_failure_check = check_name(checks.front());
            continue;
        }

        FlagsBySign by_sign = count_flags_by_sign(P);
        ir.flag_count = by_sign.total;
        for (CheckKind c : checks) {
            CheckOutcome outcome = run_check(c, P, by_sign);
            if (!outcome.pass) {
                report.aggregate_pass = false;
                if (report.first_failure_check.empty())
                    report.first_failure_check = check_name(c);
            }
            ir.checks.emplace_back(check_name(c), std::move(outcome));
        }
        report.instances.push_back(std::move(ir));
    }
    return report;
}

AppendixReport run_appendix() {
    AppendixReport rep;
    Graph path4;
    path4.n = 4;
    path4.add_edge(0, 1);
    path4.add_edge(1, 2);
    path4.add_edge(2, 3);
    Polytope P = clique_polytope(path4);
    Polytope Q = polar(P);

    bool ok = (P.n_vertices() == 12) && (Q.n_vertices() == 12);

    rep.direct_total = count_flags(P);
    ok = ok && rep.direct_total == static_cast<long long>(enumerate_flags(P).size());

    const auto& lat = P.lattice();
    std::map<FaceId, long long> through_counts;
    for (const auto& F : enumerate_flags(P)) ++through_counts[F.at_dim(0)];

    for (int vi = 0; vi < P.n_vertices(); ++vi) {
        const RatVector& v = P.vertex(vi);
        AppendixReport::VertexRow row;
        row.vertex = v;

        // support pattern decides the expected dual-facet flag count
        int lead = 0;
        while (v[lead] == 0) ++lead;
        row.expected = (lead == 1) ? 24 : 44;  // middle supports are {2,3}

        Face dual = face_in_direction(Q, v);
        std::vector<RatVector> pts;
        for (int w : face_vertex_list(dual)) pts.push_back(Q.vertex(w));
        row.dual_facet_flags = count_flags(hull(pts));

        // flags of P through the vertex, counted on the lattice
        VertexSet vs(P.n_vertices());
        vs.set(vi);
        row.flags_through_vertex = through_counts[lat.locate(vs)];

        ok = ok && row.dual_facet_flags == row.expected &&
             row.flags_through_vertex == row.expected;
        rep.weighted_total += row.dual_facet_flags;
        rep.rows.push_back(std::move(row));
    }
    ok = ok && rep.weighted_total == 8 * 44 + 4 * 24 && rep.weighted_total == 448 &&
         rep.direct_total == 448;
    rep.pass = ok;
    return rep;
}

namespace {

Json config_to_json(const CampaignConfig& cfg) {
    Json j;
    j["generator"] = generator_name(cfg.generator);
    j["dim"] = Json::array({cfg.dim_min, cfg.dim_max});
    j["count"] = cfg.count;
    j["seed"] = cfg.seed;
    Json names = Json::array();
    for (CheckKind c : cfg.checks.empty() ? all_checks() : cfg.checks)
        names.push_back(check_name(c));
    j["checks"] = std::move(names);
    if (!cfg.files.empty()) j["files"] = cfg.files;
    return j;
}

}  // namespace

Json report_to_json(const Report& r) {
    Json j;
    j["config"] = config_to_json(r.config);
    Json instances = Json::array();
    for (const auto& ir : r.instances) {
        Json ij;
        ij["index"] = ir.index;
        ij["label"] = ir.label;
        ij["dim"] = ir.dim;
        ij["flags"] = ir.flag_count;
        Json checks;
        for (const auto& [name, outcome] : ir.checks) {
            Json cj;
            cj["pass"] = outcome.pass;
            cj["detail"] = outcome.detail;
            if (!outcome.witness.empty()) cj["witness"] = outcome.witness;
            checks[name] = std::move(cj);
        }
        ij["checks"] = std::move(checks);
        instances.push_back(std::move(ij));
    }
    j["instances"] = std::move(instances);
    j["aggregate"] = r.aggregate_pass ? "pass" : "fail";
    if (!r.first_failure_check.empty())
        j["first_failure_check"] = r.first_failure_check;
    return j;
}

std::string report_to_csv(const Report& r) {
    std::ostringstream os;
    os << "instance,label,dim,flags,check,pass,detail\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        q += '"';
        return q;
    };
    for (const auto& ir : r.instances)
        for (const auto& [name, outcome] : ir.checks)
            os << ir.index << "," << quote(ir.label) << "," << ir.dim << ","
               << ir.flag_count << "," << name << ","
               << (outcome.pass ? "true" : "false") << ","
               << quote(outcome.detail +
                        (outcome.witness.empty() ? "" : "; witness: " + outcome.witness))
               << "\n";
    return os.str();
}

Json appendix_to_json(const AppendixReport& r) {
    Json j;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json rj;
        Json coords = Json::array();
        for (const auto& x : row.vertex) coords.push_back(rat_to_string(x));
        rj["vertex"] = std::move(coords);
        rj["dual_facet_flags"] = row.dual_facet_flags;
        rj["flags_through_vertex"] = row.flags_through_vertex;
        rj["expected"] = row.expected;
        rows.push_back(std::move(rj));
    }
    j["vertices"] = std::move(rows);
    j["weighted_total"] = r.weighted_total;
    j["direct_total"] = r.direct_total;
    j["identity"] = "8*44 + 4*24 = 448";
    j["aggregate"] = r.pass ? "pass" : "fail";
    return j;
}

}  // namespace polyflag
