#pragma once

// Exhaustive reference solvers for small instances. They share no code with
// the production solvers beyond the Hypergraph type and exist to check them.

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "hypergvl/core.hpp"
#include "hypergvl/rng.hpp"
#include "hypergvl/solve.hpp"

namespace hgvl::oracle {

inline constexpr std::size_t kMaxVertices = 8;
inline constexpr std::size_t kMaxEdges = 8;

inline void check_small(const Hypergraph& h) {
  if (h.num_vertices() > kMaxVertices || h.num_edges() > kMaxEdges)
    throw contract_error("oracle instance too large (|V| <= 8 and |E| <= 8 required)");
}

// Arbitrary hypergraph within the oracle limits; may be disconnected and may
// repeat hyperedges.
inline Hypergraph random_small(std::uint64_t seed, std::size_t max_n = kMaxVertices, std::size_t max_m = kMaxEdges) {
  Rng rng(seed);
  const std::size_t n = rng.uniform(2, max_n);
  const std::size_t m = rng.uniform(1, max_m);
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < m; ++j) edges.push_back(rng.sample(n, rng.uniform(2, std::min<std::size_t>(n, 4))));
  return Hypergraph(n, std::move(edges));
}

inline bool shares_vertex(const Edge& a, const Edge& b) {
  for (std::size_t x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  return false;
}

// Minimum order-weight over every simple hyperedge sequence from s to t.
inline PathResult oracle_osp(const Hypergraph& h, VertexId s, VertexId t) {
  check_small(h);
  if (s == t) throw contract_error("OSP requires distinct endpoints");
  const auto& E = h.edges();
  auto has = [&](std::size_t j, VertexId v) { return std::find(E[j].begin(), E[j].end(), v.index) != E[j].end(); };

  PathResult best;
  std::vector<std::size_t> seq;
  std::vector<bool> used(E.size(), false);
  std::function<void(std::size_t)> go = [&](std::size_t weight) {
    const std::size_t last = seq.back();
    if (has(last, t)) {
      std::vector<HyperedgeId> ids;
      for (std::size_t j : seq) ids.push_back(HyperedgeId{j});
      if (!best.reachable || weight < best.total_weight ||
          (weight == best.total_weight && ids < best.witness)) {
        best.reachable = true;
        best.total_weight = weight;
        best.witness = ids;
      }
    }
    for (std::size_t k = 0; k < E.size(); ++k) {
      if (used[k] || !shares_vertex(E[last], E[k])) continue;
      used[k] = true;
      seq.push_back(k);
      go(weight + E[k].size());
      seq.pop_back();
      used[k] = false;
    }
  };
  for (std::size_t j = 0; j < E.size(); ++j) {
    if (!has(j, s)) continue;
    used[j] = true;
    seq.assign(1, j);
    go(E[j].size());
    used[j] = false;
  }
  return best;
}

// Minimum s-t cut over every bipartition of the incidence network's nodes.
inline FlowResult oracle_omf(const Hypergraph& h, VertexId s, VertexId t) {
  check_small(h);
  if (s == t) throw contract_error("OMF requires distinct endpoints");
  const std::size_t n = h.num_vertices(), m = h.num_edges(), nodes = n + m;
  std::vector<std::size_t> free_nodes;
  for (std::size_t x = 0; x < nodes; ++x)
    if (x != s.index && x != t.index) free_nodes.push_back(x);

  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<bool> source_side(nodes, false);
  for (std::size_t bits = 0; bits < (std::size_t{1} << free_nodes.size()); ++bits) {
    std::fill(source_side.begin(), source_side.end(), false);
    source_side[s.index] = true;
    for (std::size_t i = 0; i < free_nodes.size(); ++i)
      if (bits >> i & 1) source_side[free_nodes[i]] = true;
    std::size_t cut = 0;
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t v : h.edges()[j])
        if (source_side[v] != source_side[n + j]) cut += h.edges()[j].size();
    best = std::min(best, cut);
  }
  return FlowResult{best};
}

// Tries every vertex bijection.
inline bool oracle_ism(const Hypergraph& a, const Hypergraph& b) {
  check_small(a);
  check_small(b);
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  auto canon = [](std::vector<Edge> edges) {
    for (Edge& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    return edges;
  };
  const auto target = canon(b.edges());
  std::vector<std::size_t> f(a.num_vertices());
  std::iota(f.begin(), f.end(), 0);
  do {
    std::vector<Edge> mapped = a.edges();
    for (Edge& e : mapped)
      for (std::size_t& v : e) v = f[v];
    if (canon(std::move(mapped)) == target) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

}  // namespace hgvl::oracle
