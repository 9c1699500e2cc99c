#pragma once

#include <optional>
#include <string>

#include "dpcolor/cover.hpp"
#include "dpcolor/multigraph.hpp"

namespace dpcolor {

struct GraphInput {
  Multigraph g;
  std::optional<std::vector<int>> h;  // only the JSON format can carry h
};

// Multigraph JSON: {"n": .., "edges": [[u,v,mult], ..], "h": [..]?}
// The writer is canonical (sorted edge list, fixed key order), so
// write(read(write(x))) == write(x) byte for byte.
std::string multigraph_to_json(const Multigraph& g,
                               const std::optional<std::vector<int>>& h = std::nullopt);
GraphInput multigraph_from_json(const std::string& text);

// Cover JSON: {"graph": .., "list_sizes": [..],
//              "matchings": [{"u":..,"v":..,"copies":[[[i,j],..],..]}, ..]}
std::string cover_to_json(const Cover& c);
Cover cover_from_json(const std::string& text);

// Accepts either format: JSON when the first non-space byte is '{', graph6 otherwise.
GraphInput parse_graph_text(const std::string& text);
GraphInput read_graph_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace dpcolor
