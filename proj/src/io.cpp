#include "dpcolor/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dpcolor/graph6.hpp"

namespace dpcolor {

using json = nlohmann::ordered_json;

namespace {

json graph_node(const Multigraph& g) {
  json j;
  j["n"] = g.n();
  auto edges = json::array();
  for (const auto& e : g.pairs()) edges.push_back({e.u, e.v, e.mult});
  j["edges"] = edges;
  return j;
}

Multigraph graph_from_node(const json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("multigraph json: need \"n\" and \"edges\"");
  std::vector<EdgeSlot> es;
  for (const auto& t : j.at("edges")) {
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("multigraph json: edges are [u, v, mult] triples");
    es.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  return Multigraph::build(j.at("n").get<int>(), std::move(es));
}

}  // namespace

std::string multigraph_to_json(const Multigraph& g, const std::optional<std::vector<int>>& h) {
  json j = graph_node(g);
  if (h) {
    if (int(h->size()) != g.n()) throw std::invalid_argument("multigraph json: h has wrong length");
    j["h"] = *h;
  }
  return j.dump() + "\n";
}

GraphInput multigraph_from_json(const std::string& text) {
  json j = json::parse(text);
  GraphInput in{graph_from_node(j), std::nullopt};
  if (j.contains("h")) {
    auto h = j.at("h").get<std::vector<int>>();
    if (int(h.size()) != in.g.n()) throw std::invalid_argument("multigraph json: h has wrong length");
    in.h = std::move(h);
  }
  return in;
}

std::string cover_to_json(const Cover& c) {
  json j;
  j["graph"] = graph_node(c.g);
  j["list_sizes"] = c.list_sizes;
  auto slots = json::array();
  for (int p = 0; p < c.g.pair_count(); ++p) {
    json slot;
    slot["u"] = c.g.pairs()[p].u;
    slot["v"] = c.g.pairs()[p].v;
    auto copies = json::array();
    for (const auto& m : c.matchings[p]) {
      auto mj = json::array();
      for (auto [a, b] : m) mj.push_back({a, b});
      copies.push_back(mj);
    }
    slot["copies"] = copies;
    slots.push_back(slot);
  }
  j["matchings"] = slots;
  return j.dump() + "\n";
}

Cover cover_from_json(const std::string& text) {
  json j = json::parse(text);
  Multigraph g = graph_from_node(j.at("graph"));
  auto sizes = j.at("list_sizes").get<std::vector<int>>();
  std::vector<std::vector<Matching>> ms(g.pair_count());
  if (int(j.at("matchings").size()) != g.pair_count())
    throw std::invalid_argument("cover json: one matchings entry per adjacent pair");
  for (const auto& slot : j.at("matchings")) {
    int p = g.pair_index(slot.at("u").get<int>(), slot.at("v").get<int>());
    if (p < 0) throw std::invalid_argument("cover json: matchings entry for a non-edge");
    if (!ms[p].empty()) throw std::invalid_argument("cover json: duplicate matchings entry");
    for (const auto& mj : slot.at("copies")) {
      Matching m;
      for (const auto& pr : mj) m.push_back({pr[0].get<int>(), pr[1].get<int>()});
      ms[p].push_back(std::move(m));
    }
  }
  return build_cover(std::move(g), std::move(sizes), std::move(ms));
}

GraphInput parse_graph_text(const std::string& text) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) throw std::invalid_argument("graph input: empty");
  if (text[i] == '{') return multigraph_from_json(text);
  return {read_graph6(text.substr(i)), std::nullopt};
}

GraphInput read_graph_file(const std::string& path) {
  return parse_graph_text(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write file: " + path);
  f << content;
}

}  // namespace dpcolor
