#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "hypergvl/core.hpp"

namespace hgvl {

inline constexpr int kNumColors = 3;

// Color per vertex; -1 marks an unassigned vertex.
struct VertexColoring {
  std::vector<int> color;

  bool total() const {
    return std::none_of(color.begin(), color.end(), [](int c) { return c < 0; });
  }
  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

using HyperedgeSequence = std::vector<HyperedgeId>;

// Every hyperedge must see at least two distinct colors. Colors outside
// {c0, c1, c2} make the coloring invalid.
inline bool verify_3cl(const Hypergraph& h, const VertexColoring& c) {
  if (c.color.size() != h.num_vertices() || !c.total())
    throw contract_error("3-CL coloring must assign every vertex");
  for (int col : c.color)
    if (col >= kNumColors) return false;
  for (const Edge& e : h.edges()) {
    const int first = c.color[e.front()];
    if (std::all_of(e.begin(), e.end(), [&](std::size_t v) { return c.color[v] == first; })) return false;
  }
  return true;
}

// Strict hypercycle: k >= 2 distinct hyperedges, each consecutive pair (and the
// closing pair) sharing exactly one vertex.
inline bool verify_shc(const Hypergraph& h, const HyperedgeSequence& seq) {
  for (HyperedgeId e : seq) h.check(e);
  if (seq.size() < 2) return false;
  std::set<HyperedgeId> distinct(seq.begin(), seq.end());
  if (distinct.size() != seq.size()) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Edge& a = h.edge(seq[i]);
    const Edge& b = h.edge(seq[(i + 1) % seq.size()]);
    if (edge_intersection_size(a, b) != 1) return false;
  }
  return true;
}

// The i-th step hyperedge must contain the i-th consecutive vertex pair of some
// Hamiltonian vertex order from s to t. Step hyperedges may repeat.
inline bool verify_hhm(const Hypergraph& h, const HyperedgeSequence& seq, VertexId s, VertexId t) {
  h.check(s);
  h.check(t);
  if (s == t) throw contract_error("HHM requires distinct endpoints");
  for (HyperedgeId e : seq) h.check(e);
  const std::size_t n = h.num_vertices();
  if (seq.empty() || seq.size() + 1 != n) return false;
  if (!h.contains(seq.front(), s) || !h.contains(seq.back(), t)) return false;

  std::vector<bool> visited(n, false);
  std::set<std::pair<std::uint64_t, std::size_t>> dead;  // (visited mask, current) known to fail
  const bool memo = n <= 64;
  auto mask_of = [&] {
    std::uint64_t m = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (visited[v]) m |= std::uint64_t{1} << v;
    return m;
  };

  std::function<bool(std::size_t, std::size_t)> walk = [&](std::size_t step, std::size_t cur) -> bool {
    if (step == seq.size()) return cur == t.index;
    std::uint64_t key = 0;
    if (memo) {
      key = mask_of();
      if (dead.count({key, cur})) return false;
    }
    const bool last = step + 1 == seq.size();
    for (std::size_t w : h.edge(seq[step])) {
      if (visited[w]) continue;
      if (last ? w != t.index : w == t.index) continue;
      if (!last && !h.contains(seq[step + 1], VertexId{w})) continue;
      visited[w] = true;
      const bool ok = walk(step + 1, w);
      visited[w] = false;
      if (ok) return true;
    }
    if (memo) dead.insert({key, cur});
    return false;
  };
  visited[s.index] = true;
  return walk(0, s.index);
}

inline std::string format_coloring(const VertexColoring& c) {
  std::string out = "Coloring:[";
  for (std::size_t v = 0; v < c.color.size(); ++v) {
    if (v) out += ',';
    out += "v" + std::to_string(v) + ":c" + std::to_string(c.color[v]);
  }
  return out + "]";
}

inline std::string format_edge_list(const std::string& tag, const HyperedgeSequence& seq) {
  std::string out = tag + ":[";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += to_string(seq[i]);
  }
  return out + "]";
}

inline std::string format_cycle(const HyperedgeSequence& seq) { return format_edge_list("Cycle", seq); }
inline std::string format_path(const HyperedgeSequence& seq) { return format_edge_list("Path", seq); }

// Backtracking in ascending vertex order; colors are introduced in order, so
// the first vertex is always c0.
inline std::optional<VertexColoring> find_3cl(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<std::vector<std::size_t>> closing(n);  // hyperedges whose largest vertex is v
  for (std::size_t j = 0; j < h.num_edges(); ++j) closing[h.edges()[j].back()].push_back(j);

  VertexColoring c{std::vector<int>(n, -1)};
  std::function<bool(std::size_t, int)> assign = [&](std::size_t v, int used) -> bool {
    if (v == n) return true;
    for (int col = 0; col < std::min(kNumColors, used + 1); ++col) {
      c.color[v] = col;
      bool ok = true;
      for (std::size_t j : closing[v]) {
        const Edge& e = h.edges()[j];
        if (std::all_of(e.begin(), e.end(), [&](std::size_t x) { return c.color[x] == col; })) {
          ok = false;
          break;
        }
      }
      if (ok && assign(v + 1, std::max(used, col + 1))) return true;
    }
    c.color[v] = -1;
    return false;
  };
  if (!assign(0, 0)) return std::nullopt;
  return c;
}

// Strict hypercycles of length >= 3 are exactly the cycles of the graph whose
// nodes are hyperedges and whose links join hyperedges meeting in one vertex,
// so a DFS back edge yields one. Length-2 cycles are not searched for.
inline std::optional<HyperedgeSequence> find_shc(const Hypergraph& h) {
  const std::size_t m = h.num_edges();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (edge_intersection_size(h.edges()[a], h.edges()[b]) == 1) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(m, none), depth(m, none);
  std::optional<HyperedgeSequence> found;
  std::function<void(std::size_t)> dfs = [&](std::size_t u) {
    for (std::size_t w : adj[u]) {
      if (found) return;
      if (w == parent[u]) continue;
      if (depth[w] == none) {
        parent[w] = u;
        depth[w] = depth[u] + 1;
        dfs(w);
      } else if (depth[w] < depth[u]) {
        HyperedgeSequence cycle;
        for (std::size_t x = u; x != w; x = parent[x]) cycle.push_back(HyperedgeId{x});
        cycle.push_back(HyperedgeId{w});
        std::reverse(cycle.begin(), cycle.end());
        found = std::move(cycle);
      }
    }
  };
  for (std::size_t root = 0; root < m && !found; ++root) {
    if (depth[root] != none) continue;
    depth[root] = 0;
    dfs(root);
  }
  return found;
}

// Hamiltonian vertex path over the clique expansion by subset DP. An empty
// `start` or `end` leaves that endpoint free; the smallest feasible end
// vertex is used.
inline std::optional<std::vector<std::size_t>> find_hamiltonian_vertex_path(const Hypergraph& h,
                                                                           std::optional<VertexId> start,
                                                                           std::optional<VertexId> end = {}) {
  const std::size_t n = h.num_vertices();
  if (start) h.check(*start);
  if (end) h.check(*end);
  if (n > 24) throw contract_error("Hamiltonian search is limited to 24 vertices");
  if (n == 1) return std::vector<std::size_t>{0};

  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : h.edges())
    for (std::size_t x : e)
      for (std::size_t y : e)
        if (x != y) adj[x] |= std::uint32_t{1} << y;

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);  // reach[mask]: feasible path ends
  for (std::size_t v = 0; v < n; ++v)
    if (!start || start->index == v) reach[std::uint32_t{1} << v] = std::uint32_t{1} << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = reach[mask];
    while (ends) {
      const unsigned v = static_cast<unsigned>(__builtin_ctz(ends));
      ends &= ends - 1;
      std::uint32_t next = adj[v] & ~mask;
      while (next) {
        const unsigned w = static_cast<unsigned>(__builtin_ctz(next));
        next &= next - 1;
        reach[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
    if (mask == full) break;
  }

  std::uint32_t finals = reach[full];
  if (end) finals &= std::uint32_t{1} << end->index;
  if (!finals) return std::nullopt;

  std::vector<std::size_t> path;
  std::uint32_t mask = full;
  std::size_t cur = static_cast<std::size_t>(__builtin_ctz(finals));
  for (;;) {
    path.push_back(cur);
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << cur);
    if (rest == 0) break;
    const std::uint32_t preds = reach[rest] & adj[cur];
    cur = static_cast<std::size_t>(__builtin_ctz(preds));
    mask = rest;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Step hyperedges for a vertex path: the smallest id containing each pair.
inline HyperedgeSequence steps_for_vertex_path(const Hypergraph& h, const std::vector<std::size_t>& path) {
  HyperedgeSequence seq;
  for (std::size_t i = 1; i < path.size(); ++i) {
    bool placed = false;
    for (std::size_t j : h.incident(VertexId{path[i - 1]})) {
      if (h.contains(HyperedgeId{j}, VertexId{path[i]})) {
        seq.push_back(HyperedgeId{j});
        placed = true;
        break;
      }
    }
    if (!placed) throw contract_error("vertex path uses a pair with no common hyperedge");
  }
  return seq;
}

inline std::optional<HyperedgeSequence> find_hhm(const Hypergraph& h, VertexId s, VertexId t) {
  if (s == t) throw contract_error("HHM requires distinct endpoints");
  auto path = find_hamiltonian_vertex_path(h, s, t);
  if (!path) return std::nullopt;
  return steps_for_vertex_path(h, *path);
}

}  // namespace hgvl
