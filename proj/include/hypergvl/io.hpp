#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hypergvl/core.hpp"

namespace hgvl {

using json = nlohmann::json;

// Canonical form: {"n": <int>, "edges": [[<int>,...],...]}
inline json to_json(const Hypergraph& h) {
  json edges = json::array();
  for (const Edge& e : h.edges()) edges.push_back(e);
  return json{{"n", h.num_vertices()}, {"edges", std::move(edges)}};
}

inline Hypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("hypergraph JSON needs \"n\" and \"edges\"");
  return Hypergraph(j.at("n").get<std::size_t>(), j.at("edges").get<std::vector<Edge>>());
}

// hMETIS-style text: header "<num_edges> <num_vertices> [fmt]", then one line of
// 1-based vertex ids per hyperedge. '%' starts a comment line. Nets that collapse
// to a single pin are dropped; repeated pins are merged.
inline Hypergraph parse_hmetis(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (out.empty() || out[0] == '%') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw std::invalid_argument("hMETIS: missing header line");
  std::istringstream header(line);
  std::size_t num_edges = 0, num_vertices = 0, fmt = 0;
  if (!(header >> num_edges >> num_vertices))
    throw std::invalid_argument("hMETIS: header must be '<num_edges> <num_vertices>'");
  if (header >> fmt && fmt != 0)
    throw std::invalid_argument("hMETIS: weighted formats are not supported");

  std::vector<Edge> edges;
  for (std::size_t j = 0; j < num_edges; ++j) {
    if (!next_line(line))
      throw std::invalid_argument("hMETIS: expected " + std::to_string(num_edges) + " hyperedges, got " +
                                  std::to_string(j));
    std::istringstream iss(line);
    Edge e;
    long long pin;
    while (iss >> pin) {
      if (pin < 1 || static_cast<std::size_t>(pin) > num_vertices)
        throw std::invalid_argument("hMETIS: pin " + std::to_string(pin) + " out of range on hyperedge " +
                                    std::to_string(j + 1));
      e.push_back(static_cast<std::size_t>(pin - 1));
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() >= 2) edges.push_back(std::move(e));
  }
  return Hypergraph(num_vertices, std::move(edges));
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << contents;
  if (!f) throw std::runtime_error("write failed: " + path);
}

// Accepts canonical JSON or hMETIS text, sniffed from the first non-blank byte.
inline Hypergraph load_hypergraph(const std::string& path) {
  const std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return hypergraph_from_json(json::parse(text));
  std::istringstream in(text);
  return parse_hmetis(in);
}

}  // namespace hgvl
