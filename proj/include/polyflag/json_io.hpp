#ifndef POLYFLAG_JSON_IO_HPP
#define POLYFLAG_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "polyflag/hanner.hpp"
#include "polyflag/polytope.hpp"

namespace polyflag {

using Json = nlohmann::ordered_json;

/// {"dim": d, "vertices": [["p/q", ...], ...]}.  Facets and the lattice
/// are derived on load, never trusted from the file.
Json polytope_to_json(const Polytope& P);
Polytope polytope_from_json(const Json& j);

/// {"n": k, "edges": [[i, j], ...]} with 1-based vertex labels.
Json graph_to_json(const Graph& G);
Graph graph_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace polyflag

#endif
