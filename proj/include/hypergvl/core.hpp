#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgvl {

// Caller broke a documented precondition.
class contract_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Randomized construction ran out of its retry budget.
class generation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text; `position` is a byte offset into the parsed input.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct VertexId {
  std::size_t index = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct HyperedgeId {
  std::size_t index = 0;
  auto operator<=>(const HyperedgeId&) const = default;
};

inline std::string to_string(VertexId v) { return "v" + std::to_string(v.index); }
inline std::string to_string(HyperedgeId e) { return "e" + std::to_string(e.index); }

using Edge = std::vector<std::size_t>;
using VertexSet = std::vector<VertexId>;  // sorted ascending, no duplicates

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::vector<std::size_t> orders;
};

// Immutable hypergraph: `n` vertices v0..v(n-1) and an ordered list of
// hyperedges. Each hyperedge is stored sorted; its id is its list position.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(std::size_t num_vertices, std::vector<Edge> edges)
      : n_(num_vertices), edges_(std::move(edges)) {
    if (n_ == 0) throw std::invalid_argument("hypergraph needs at least one vertex");
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      Edge& e = edges_[j];
      std::sort(e.begin(), e.end());
      if (e.size() < 2)
        throw std::invalid_argument("hyperedge e" + std::to_string(j) + " has order < 2");
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw std::invalid_argument("hyperedge e" + std::to_string(j) + " repeats a vertex");
      if (e.back() >= n_)
        throw std::invalid_argument("hyperedge e" + std::to_string(j) + " references v" +
                                    std::to_string(e.back()) + " but n = " + std::to_string(n_));
    }
    incident_.assign(n_, {});
    for (std::size_t j = 0; j < edges_.size(); ++j)
      for (std::size_t v : edges_[j]) incident_[v].push_back(j);
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  const Edge& edge(HyperedgeId e) const {
    check(e);
    return edges_[e.index];
  }

  // Ids of the hyperedges containing v, ascending.
  const std::vector<std::size_t>& incident(VertexId v) const {
    check(v);
    return incident_[v.index];
  }

  bool contains(HyperedgeId e, VertexId v) const {
    const Edge& members = edge(e);
    return std::binary_search(members.begin(), members.end(), v.index);
  }

  void check(VertexId v) const {
    if (v.index >= n_) throw std::out_of_range("vertex " + to_string(v) + " out of range");
  }
  void check(HyperedgeId e) const {
    if (e.index >= edges_.size()) throw std::out_of_range("hyperedge " + to_string(e) + " out of range");
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

inline std::size_t degree(const Hypergraph& h, VertexId v) { return h.incident(v).size(); }

inline std::size_t order(const Hypergraph& h, HyperedgeId e) { return h.edge(e).size(); }

inline DegreeProfile degree_profile(const Hypergraph& h) {
  DegreeProfile p;
  p.degrees.assign(h.num_vertices(), 0);
  for (const Edge& e : h.edges()) {
    p.orders.push_back(e.size());
    for (std::size_t v : e) ++p.degrees[v];
  }
  return p;
}

// Vertices sharing a hyperedge of order >= min_order with u (u excluded).
inline VertexSet neighbors_filtered(const Hypergraph& h, VertexId u, std::size_t min_order) {
  std::vector<bool> seen(h.num_vertices(), false);
  for (std::size_t j : h.incident(u)) {
    const Edge& e = h.edges()[j];
    if (e.size() < min_order) continue;
    for (std::size_t v : e) seen[v] = true;
  }
  seen[u.index] = false;
  VertexSet out;
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (seen[v]) out.push_back(VertexId{v});
  return out;
}

inline VertexSet neighbors(const Hypergraph& h, VertexId u) { return neighbors_filtered(h, u, 0); }

// Component label per vertex (labels are dense, in order of first vertex).
inline std::vector<std::size_t> component_labels(const Hypergraph& h) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(h.num_vertices(), unset);
  std::vector<bool> edge_done(h.num_edges(), false);
  std::size_t next = 0;
  std::vector<std::size_t> queue;
  for (std::size_t root = 0; root < h.num_vertices(); ++root) {
    if (label[root] != unset) continue;
    label[root] = next;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t j : h.incident(VertexId{queue[head]})) {
        if (edge_done[j]) continue;
        edge_done[j] = true;
        for (std::size_t w : h.edges()[j]) {
          if (label[w] == unset) {
            label[w] = next;
            queue.push_back(w);
          }
        }
      }
    }
    ++next;
  }
  return label;
}

inline std::size_t num_components(const Hypergraph& h) {
  auto labels = component_labels(h);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

inline bool is_connected(const Hypergraph& h) { return num_components(h) == 1; }

// Number of hyperedges containing both u and v.
inline std::size_t co_occurrence(const Hypergraph& h, std::size_t u, std::size_t v) {
  std::size_t count = 0;
  for (std::size_t j : h.incident(VertexId{u})) {
    const Edge& e = h.edges()[j];
    if (std::binary_search(e.begin(), e.end(), v)) ++count;
  }
  return count;
}

// Unordered pairs u < v co-occurring in at least one hyperedge, lexicographic.
inline std::vector<std::pair<std::size_t, std::size_t>> clique_pairs(const Hypergraph& h) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < h.num_vertices(); ++u)
    for (VertexId v : neighbors(h, VertexId{u}))
      if (u < v.index) pairs.emplace_back(u, v.index);
  return pairs;
}

inline std::size_t edge_intersection_size(const Edge& a, const Edge& b) {
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace hgvl
