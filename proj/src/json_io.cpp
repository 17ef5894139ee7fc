#include "polyflag/json_io.hpp"

#include <fstream>

#include "polyflag/exceptions.hpp"
#include "polyflag/rational.hpp"

namespace polyflag {

Json polytope_to_json(const Polytope& P) {
    Json j;
    j["dim"] = P.ambient_dim();
    Json verts = Json::array();
    for (const auto& v : P.vertices()) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(rat_to_string(x));
        verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    return j;
}

namespace {

Rational rational_from_json(const Json& x) {
    if (x.is_number_integer()) return Rational(x.get<long long>());
    if (x.is_string()) return parse_rational(x.get<std::string>());
    throw IoError("coordinate must be an integer or a \"p/q\" string");
}

}  // namespace

Polytope polytope_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("vertices"))
        throw IoError("polytope JSON needs \"dim\" and \"vertices\"");
    const int d = j.at("dim").get<int>();
    std::vector<RatVector> pts;
    for (const auto& row : j.at("vertices")) {
        RatVector v;
        for (const auto& x : row) v.push_back(rational_from_json(x));
        if (static_cast<int>(v.size()) != d)
            throw IoError("vertex of wrong dimension in polytope JSON");
        pts.push_back(std::move(v));
    }
    return hull(pts);
}

Json graph_to_json(const Graph& G) {
    Json j;
    j["n"] = G.n;
    Json edges = Json::array();
    for (auto [a, b] : G.edges) edges.push_back(Json::array({a + 1, b + 1}));
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw IoError("graph JSON needs \"n\" and \"edges\"");
    Graph G;
    G.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw IoError("bad edge in graph JSON");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 1 || b < 1 || a > G.n || b > G.n || a == b)
            throw IoError("edge endpoints must be distinct labels in 1..n");
        G.add_edge(a - 1, b - 1);
    }
    return G;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace polyflag
