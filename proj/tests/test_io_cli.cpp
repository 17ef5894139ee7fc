#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyflag/campaign.hpp"
#include "polyflag/exceptions.hpp"
#include "polyflag/json_io.hpp"
#include "test_util.hpp"

using namespace polyflag;
namespace tu = polyflag::testutil;

TEST_CASE("polytope JSON round trip uses p/q strings") {
    auto P = hull({{Rational(1) / 2, Rational(-3)}, {Rational(2), Rational(0)},
                   {Rational(-1), Rational(1) / 3}});
    Json j = polytope_to_json(P);
    CHECK(j["dim"] == 2);
    CHECK(j["vertices"][0][0].is_string());
    auto Q = polytope_from_json(j);
    CHECK(P == Q);
    // integer coordinates are accepted on input
    Json raw = {{"dim", 1}, {"vertices", {{1}, {-1}}}};
    CHECK(polytope_from_json(raw).n_vertices() == 2);
    CHECK_THROWS_AS(polytope_from_json(Json{{"dim", 2}}), IoError);
    Json bad = {{"dim", 2}, {"vertices", {{"1"}}}};
    CHECK_THROWS_AS(polytope_from_json(bad), IoError);
}

TEST_CASE("graph JSON round trip is 1-based") {
    Graph G;
    G.n = 4;
    G.add_edge(0, 1);
    G.add_edge(2, 3);
    Json j = graph_to_json(G);
    CHECK(j["edges"][0][0] == 1);
    CHECK(graph_from_json(j) == G);
    Json bad = {{"n", 2}, {"edges", {{0, 1}}}};
    CHECK_THROWS_AS(graph_from_json(bad), IoError);
}

TEST_CASE("identical config and seed give byte-identical reports") {
    CampaignConfig cfg;
    cfg.generator = GeneratorKind::Unconditional;
    cfg.dim_min = cfg.dim_max = 2;
    cfg.count = 3;
    cfg.seed = 99;
    cfg.checks = {CheckKind::FlagBound, CheckKind::EqualityIffHanner,
                  CheckKind::Injections};
    auto r1 = run_campaign(cfg);
    auto r2 = run_campaign(cfg);
    CHECK(report_to_json(r1).dump(2) == report_to_json(r2).dump(2));
    CHECK(report_to_csv(r1) == report_to_csv(r2));
    CHECK(r1.aggregate_pass);
}

TEST_CASE("csv has one row per instance and check") {
    CampaignConfig cfg;
    cfg.generator = GeneratorKind::Hanner;
    cfg.dim_min = 1;
    cfg.dim_max = 2;
    cfg.checks = {CheckKind::FlagBound, CheckKind::Ladder};
    auto r = run_campaign(cfg);
    REQUIRE(r.instances.size() == 3);  // segment, diamond, square
    std::string csv = report_to_csv(r);
    long long rows = std::count(csv.begin(), csv.end(), '\n');
    CHECK(rows == 1 + 3 * 2);  // header + instances x checks
}

TEST_CASE("failing instances carry a witness or detail and fail the aggregate") {
    // a proper polytope that is not locally anti-blocking: its x-axis
    // section is [-1/2, 1/2] but its projection is [-1, 1]
    auto P = hull({{Rational(1), Rational(1)}, {Rational(-1), Rational(1)},
                   {Rational(0), Rational(-1)}});
    CampaignConfig cfg;
    cfg.generator = GeneratorKind::File;
    Json j = polytope_to_json(P);
    write_text_file("/tmp/polyflag_test_bad.json", j.dump());
    cfg.files = {"/tmp/polyflag_test_bad.json"};
    cfg.checks = {CheckKind::FlagBound};
    auto r = run_campaign(cfg);
    CHECK(!r.aggregate_pass);
    REQUIRE(r.instances.size() == 1);
    const auto& [name, outcome] = r.instances[0].checks.at(0);
    CHECK(name == "flag-bound");
    CHECK(!outcome.pass);
    CHECK(!outcome.detail.empty());
    Json rj = report_to_json(r);
    CHECK(rj["aggregate"] == "fail");
    CHECK(rj["first_failure_check"] == "flag-bound");
}

TEST_CASE("appendix report shape") {
    auto rep = run_appendix();
    CHECK(rep.pass);
    CHECK(rep.rows.size() == 12);
    CHECK(rep.weighted_total == 448);
    CHECK(rep.direct_total == 448);
    int n44 = 0, n24 = 0;
    for (const auto& row : rep.rows) {
        CHECK(row.dual_facet_flags == row.expected);
        CHECK(row.flags_through_vertex == row.expected);
        if (row.expected == 44) ++n44;
        if (row.expected == 24) ++n24;
    }
    CHECK(n44 == 8);
    CHECK(n24 == 4);
    Json j = appendix_to_json(rep);
    CHECK(j["aggregate"] == "pass");
}

TEST_CASE("check names, parsing and exit codes are stable") {
    for (CheckKind c : all_checks()) {
        auto back = parse_check(check_name(c));
        REQUIRE(back.has_value());
        CHECK(*back == c);
        CHECK(check_exit_code(c) >= 2);
    }
    CHECK(!parse_check("bogus").has_value());
    CHECK(parse_generator("unconditional").has_value());
    CHECK(!parse_generator("bogus").has_value());
    CHECK(flag_bound(4) == 384);
}
