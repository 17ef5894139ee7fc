#ifndef POLYFLAG_CAMPAIGN_HPP
#define POLYFLAG_CAMPAIGN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyflag/flags.hpp"
#include "polyflag/hanner.hpp"
#include "polyflag/json_io.hpp"

namespace polyflag {

enum class CheckKind {
    FlagBound,
    EqualityIffHanner,
    Ladder,
    UniqueEdge,
    UniqueFacet,
    Injections,
    GraphLaws,
    Prop25,
    MinDownwards,
};

const std::vector<CheckKind>& all_checks();
std::string check_name(CheckKind c);
std::optional<CheckKind> parse_check(const std::string& name);
/// Nonzero process exit code when this check class fails first.
int check_exit_code(CheckKind c);

enum class GeneratorKind { Hanner, CliquePolytope, Unconditional, File };
std::string generator_name(GeneratorKind g);
std::optional<GeneratorKind> parse_generator(const std::string& name);

struct CampaignConfig {
    GeneratorKind generator = GeneratorKind::Hanner;
    int dim_min = 2;
    int dim_max = 3;
    int count = 0;  // per dimension for the random generator; 0 = generator default
    unsigned long long seed = 0;
    std::vector<CheckKind> checks;  // empty means all
    std::vector<std::string> files; // for GeneratorKind::File
};

struct CheckOutcome {
    bool pass = true;
    std::string detail;
    std::string witness;  // nonempty on theorem-style failures
};

struct InstanceReport {
    int index = 0;
    std::string label;
    int dim = 0;
    long long flag_count = 0;
    std::vector<std::pair<std::string, CheckOutcome>> checks;  // in run order
};

struct Report {
    CampaignConfig config;
    std::vector<InstanceReport> instances;
    bool aggregate_pass = true;
    std::string first_failure_check;  // name of the first failing check class
};

Report run_campaign(const CampaignConfig& config);

/// 2^d * d!.
long long flag_bound(int d);

/// The flag-count reproduction for the clique polytope of the 4-path:
/// per-vertex dual-facet flag counts (44 for the outer supports, 24 for
/// the middle ones), their weighted total 8*44 + 4*24 = 448, and the
/// independent direct enumeration, which must agree.
struct AppendixReport {
    struct VertexRow {
        RatVector vertex;
        long long dual_facet_flags = 0;
        long long expected = 0;
        long long flags_through_vertex = 0;
    };
    std::vector<VertexRow> rows;
    long long weighted_total = 0;
    long long direct_total = 0;
    bool pass = false;
};
AppendixReport run_appendix();

Json report_to_json(const Report& r);
std::string report_to_csv(const Report& r);
Json appendix_to_json(const AppendixReport& r);

}  // namespace polyflag

#endif
