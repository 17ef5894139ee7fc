// Command-line front end: build polytopes, count and bucket flags, run
// verification campaigns, reproduce the 448-flag computation, and convert
// reports between formats.  Exit code 0 means every requested check
// passed; nonzero encodes the first failing check class.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "polyflag/campaign.hpp"
#include "polyflag/exceptions.hpp"
#include "polyflag/flags.hpp"
#include "polyflag/hanner.hpp"
#include "polyflag/json_io.hpp"

namespace {

using namespace polyflag;

constexpr int kUsageError = 1;
constexpr int kAppendixError = 11;
constexpr int kInternalError = 20;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

int cmd_build(const std::string& hanner_expr, const std::string& graph_file,
              const std::string& vertex_file, const std::string& out_path) {
    int sources = !hanner_expr.empty() + !graph_file.empty() + !vertex_file.empty();
    if (sources != 1) {
        std::cerr << "build: need exactly one of --hanner, --graph, --vertices\n";
        return kUsageError;
    }
    Polytope P = [&] {
        if (!hanner_expr.empty())
            return build_hanner(HannerExpr::parse(hanner_expr));
        if (!graph_file.empty())
            return clique_polytope(graph_from_json(load_json_file(graph_file)));
        return polytope_from_json(load_json_file(vertex_file));
    }();
    emit(polytope_to_json(P).dump(2) + "\n", out_path);
    return 0;
}

int cmd_flags(const std::string& file, bool by_sign, const std::string& format,
              const std::string& out_path) {
    Polytope P = polytope_from_json(load_json_file(file));
    const long long total = count_flags(P);
    // double-entry: the chain-counting total must match the enumeration
    if (total != static_cast<long long>(enumerate_flags(P).size()))
        throw TheoremViolationError("flag count disagrees with enumeration");

    Json j;
    j["dim"] = P.ambient_dim();
    j["vertices"] = P.n_vertices();
    j["flags"] = total;
    std::string csv = "key,value\nflags," + std::to_string(total) + "\n";
    if (by_sign) {
        auto by = count_flags_by_sign(P);
        if (by.total != total)
            throw TheoremViolationError("signed buckets disagree with the total");
        Json buckets;
        for (const auto& [cone, n] : by.per_orthant) {
            buckets[cone.str()] = n;
            csv += "sign " + cone.str() + "," + std::to_string(n) + "\n";
        }
        j["by_sign"] = std::move(buckets);
    }
    if (format == "json") {
        emit(j.dump(2) + "\n", out_path);
    } else if (format == "csv") {
        emit(csv, out_path);
    } else {
        std::string text = "flags: " + std::to_string(total) + "\n";
        if (j.contains("by_sign"))
            for (const auto& [k, v] : j["by_sign"].items())
                text += "  " + k + ": " + v.dump() + "\n";
        emit(text, out_path);
    }
    return 0;
}

int cmd_verify(const CampaignConfig& cfg, const std::string& format,
               const std::string& out_path) {
    auto t0 = std::chrono::steady_clock::now();
    Report report = run_campaign(cfg);
    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "verify: " << report.instances.size() << " instances in "
              << std::chrono::duration<double>(t1 - t0).count() << " s -> "
              << (report.aggregate_pass ? "pass" : "fail") << "\n";
    if (format == "csv")
        emit(report_to_csv(report), out_path);
    else
        emit(report_to_json(report).dump(2) + "\n", out_path);
    if (report.aggregate_pass) return 0;
    auto kind = parse_check(report.first_failure_check);
    return kind ? check_exit_code(*kind) : kInternalError;
}

int cmd_appendix(const std::string& format, const std::string& out_path) {
    auto rep = run_appendix();
    if (format == "csv") {
        std::string csv = "vertex,dual_facet_flags,flags_through_vertex,expected\n";
        for (const auto& row : rep.rows) {
            csv += "\"" + vec_to_string(row.vertex) + "\"," +
                   std::to_string(row.dual_facet_flags) + "," +
                   std::to_string(row.flags_through_vertex) + "," +
                   std::to_string(row.expected) + "\n";
        }
        csv += "total," + std::to_string(rep.weighted_total) + ",direct," +
               std::to_string(rep.direct_total) + "\n";
        emit(csv, out_path);
    } else {
        emit(appendix_to_json(rep).dump(2) + "\n", out_path);
    }
    return rep.pass ? 0 : kAppendixError;
}

int cmd_report(const std::string& in_path, const std::string& format,
               const std::string& out_path) {
    Json j = load_json_file(in_path);
    if (format == "json") {
        emit(j.dump(2) + "\n", out_path);
        return 0;
    }
    // rebuild the CSV rows from the stored JSON
    std::string csv = "instance,label,dim,flags,check,pass,detail\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        q += '"';
        return q;
    };
    for (const auto& inst : j.at("instances")) {
        for (const auto& [name, chk] : inst.at("checks").items()) {
            std::string detail = chk.value("detail", "");
            if (chk.contains("witness"))
                detail += "; witness: " + chk.at("witness").get<std::string>();
            csv += inst.at("index").dump() + "," +
                   quote(inst.at("label").get<std::string>()) + "," +
                   inst.at("dim").dump() + "," + inst.at("flags").dump() + "," +
                   name + "," + (chk.at("pass").get<bool>() ? "true" : "false") +
                   "," + quote(detail) + "\n";
        }
    }
    emit(csv, out_path);
    return 0;
}

bool parse_dim_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    auto dash = text.find('-');
    try {
        if (dots != std::string::npos) {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        } else if (dash != std::string::npos && dash > 0) {
            lo = std::stoi(text.substr(0, dash));
            hi = std::stoi(text.substr(dash + 1));
        } else {
            lo = hi = std::stoi(text);
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && hi >= lo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact flag-count verifier for locally anti-blocking polytopes"};
    app.require_subcommand(1);

    std::string out_path, format = "json";

    // build
    auto* build = app.add_subcommand("build", "construct a polytope and write its JSON");
    std::string hanner_expr, graph_file, vertex_file;
    build->add_option("--hanner", hanner_expr,
                      "construction expression, e.g. polar(join(seg,seg))");
    build->add_option("--graph", graph_file, "graph JSON file (clique polytope)");
    build->add_option("--vertices", vertex_file, "polytope JSON file (vertex list)");
    build->add_option("--out", out_path, "output path (default stdout)");

    // flags
    auto* flags_cmd = app.add_subcommand("flags", "count the flags of a polytope");
    std::string flags_file;
    bool by_sign = false;
    flags_cmd->add_option("file", flags_file, "polytope JSON file")->required();
    flags_cmd->add_flag("--by-sign", by_sign, "bucket the count by orthant sign");
    flags_cmd->add_option("--format", format, "json|csv|text");
    flags_cmd->add_option("--out", out_path, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    std::string generator = "hanner", dim_range = "2..3", checks_arg;
    CampaignConfig cfg;
    verify->add_option("--generator", generator,
                       "hanner|clique-polytope|unconditional|file");
    verify->add_option("--dim", dim_range, "dimension or range, e.g. 3 or 2..4");
    verify->add_option("--count", cfg.count, "instances per dimension (random)");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--checks", checks_arg,
                       "comma-separated subset of: flag-bound,equality-iff-hanner,"
                       "ladder,unique-edge,unique-facet,injections,graph-laws,"
                       "prop-2-5,min-downwards");
    verify->add_option("--files", cfg.files, "polytope JSON files for --generator file");
    verify->add_option("--format", format, "json|csv");
    verify->add_option("--out", out_path, "output path (default stdout)");

    // appendix
    auto* appendix = app.add_subcommand(
        "appendix", "reproduce the 448-flag computation for the 4-path clique polytope");
    appendix->add_option("--format", format, "json|csv");
    appendix->add_option("--out", out_path, "output path (default stdout)");

    // report
    auto* report = app.add_subcommand("report", "convert a stored report");
    std::string report_in;
    report->add_option("--in", report_in, "report JSON file")->required();
    report->add_option("--format", format, "json|csv");
    report->add_option("--out", out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed())
            return cmd_build(hanner_expr, graph_file, vertex_file, out_path);
        if (flags_cmd->parsed()) return cmd_flags(flags_file, by_sign, format, out_path);
        if (verify->parsed()) {
            if (!parse_dim_range(dim_range, cfg.dim_min, cfg.dim_max)) {
                std::cerr << "verify: bad --dim '" << dim_range << "'\n";
                return kUsageError;
            }
            auto gen = parse_generator(generator);
            if (!gen) {
                std::cerr << "verify: unknown generator '" << generator << "'\n";
                return kUsageError;
            }
            cfg.generator = *gen;
            if (!checks_arg.empty()) {
                std::size_t pos = 0;
                while (pos <= checks_arg.size()) {
                    auto comma = checks_arg.find(',', pos);
                    std::string name = checks_arg.substr(
                        pos, comma == std::string::npos ? std::string::npos
                                                        : comma - pos);
                    auto kind = parse_check(name);
                    if (!kind) {
                        std::cerr << "verify: unknown check '" << name << "'\n";
                        return kUsageError;
                    }
                    cfg.checks.push_back(*kind);
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            }
            return cmd_verify(cfg, format, out_path);
        }
        if (appendix->parsed()) return cmd_appendix(format, out_path);
        if (report->parsed()) return cmd_report(report_in, format, out_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kUsageError;
    } catch (const TheoremViolationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kInternalError;
    } catch (const EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
