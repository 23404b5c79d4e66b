#pragma once

#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <utility>

#include "hypergvl/core.hpp"

namespace hgvl {

struct PathResult {
  bool reachable = false;
  std::size_t total_weight = 0;
  std::vector<HyperedgeId> witness;

  friend bool operator==(const PathResult&, const PathResult&) = default;
};

struct FlowResult {
  std::size_t value = 0;
  friend bool operator==(const FlowResult&, const FlowResult&) = default;
};

inline std::size_t solve_vc(const Hypergraph& h) { return h.num_vertices(); }
inline std::size_t solve_hec(const Hypergraph& h) { return h.num_edges(); }
inline VertexSet solve_ne(const Hypergraph& h, VertexId u) { return neighbors(h, u); }
inline VertexSet solve_one(const Hypergraph& h, VertexId u, std::size_t k) {
  if (k < 2) throw contract_error("ONe threshold must be >= 2");
  return neighbors_filtered(h, u, k);
}

inline std::size_t solve_dvc(const Hypergraph& h, std::size_t d) {
  std::size_t count = 0;
  for (std::size_t v = 0; v < h.num_vertices(); ++v)
    if (degree(h, VertexId{v}) == d) ++count;
  return count;
}

inline std::size_t solve_oec(const Hypergraph& h, std::size_t k) {
  return static_cast<std::size_t>(
      std::count_if(h.edges().begin(), h.edges().end(), [k](const Edge& e) { return e.size() == k; }));
}

// Order-weighted shortest path: Dijkstra over hyperedges, each hyperedge
// costing its order. Labels are (weight, id sequence) so equal-weight ties
// resolve to the lexicographically smallest sequence.
inline PathResult solve_osp(const Hypergraph& h, VertexId s, VertexId t) {
  h.check(s);
  h.check(t);
  if (s == t) throw contract_error("OSP requires distinct endpoints");

  using Label = std::pair<std::size_t, std::vector<std::size_t>>;
  const std::size_t m = h.num_edges();
  std::vector<std::optional<Label>> best(m);
  std::vector<bool> settled(m, false);
  std::priority_queue<Label, std::vector<Label>, std::greater<>> frontier;

  for (std::size_t j : h.incident(s)) {
    Label l{h.edges()[j].size(), {j}};
    best[j] = l;
    frontier.push(std::move(l));
  }

  // Hyperedges adjacent to j: share at least one vertex.
  auto for_each_adjacent = [&](std::size_t j, auto&& fn) {
    std::vector<bool> seen(m, false);
    seen[j] = true;
    for (std::size_t v : h.edges()[j])
      for (std::size_t k : h.incident(VertexId{v}))
        if (!seen[k]) {
          seen[k] = true;
          fn(k);
        }
  };

  std::optional<Label> answer;
  while (!frontier.empty()) {
    Label cur = frontier.top();
    frontier.pop();
    const std::size_t j = cur.second.back();
    if (settled[j] || cur != *best[j]) continue;
    settled[j] = true;
    if (h.contains(HyperedgeId{j}, t)) {
      answer = std::move(cur);
      break;
    }
    for_each_adjacent(j, [&](std::size_t k) {
      if (settled[k]) return;
      Label next{cur.first + h.edges()[k].size(), cur.second};
      next.second.push_back(k);
      if (!best[k] || next < *best[k]) {
        best[k] = next;
        frontier.push(std::move(next));
      }
    });
  }

  PathResult r;
  if (!answer) return r;
  r.reachable = true;
  r.total_weight = answer->first;
  for (std::size_t j : answer->second) r.witness.push_back(HyperedgeId{j});
  return r;
}

namespace detail {

// Shortest-augmenting-path max flow on a small dense residual network.
class EdmondsKarp {
 public:
  explicit EdmondsKarp(std::size_t nodes) : head_(nodes, npos) {}

  void add_arc(std::size_t from, std::size_t to, std::size_t cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = arcs_.size() - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = arcs_.size() - 1;
  }

  std::size_t run(std::size_t source, std::size_t sink) {
    std::size_t total = 0;
    std::vector<std::size_t> via(head_.size());
    for (;;) {
      std::fill(via.begin(), via.end(), npos);
      std::vector<bool> seen(head_.size(), false);
      std::queue<std::size_t> q;
      q.push(source);
      seen[source] = true;
      while (!q.empty() && !seen[sink]) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t a = head_[u]; a != npos; a = arcs_[a].next) {
          if (arcs_[a].cap == 0 || seen[arcs_[a].to]) continue;
          seen[arcs_[a].to] = true;
          via[arcs_[a].to] = a;
          q.push(arcs_[a].to);
        }
      }
      if (!seen[sink]) return total;
      std::size_t push = std::numeric_limits<std::size_t>::max();
      for (std::size_t v = sink; v != source; v = arcs_[via[v] ^ 1].to) push = std::min(push, arcs_[via[v]].cap);
      for (std::size_t v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].cap -= push;
        arcs_[via[v] ^ 1].cap += push;
      }
      total += push;
    }
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  struct Arc {
    std::size_t to;
    std::size_t cap;
    std::size_t next;
  };
  std::vector<std::size_t> head_;
  std::vector<Arc> arcs_;
};

}  // namespace detail

// Max flow on the incidence network: vertex nodes 0..n-1, hyperedge nodes
// n..n+m-1, each membership an undirected link of capacity |e|.
inline FlowResult solve_omf(const Hypergraph& h, VertexId s, VertexId t) {
  h.check(s);
  h.check(t);
  if (s == t) throw contract_error("OMF requires distinct endpoints");
  const std::size_t n = h.num_vertices();
  detail::EdmondsKarp net(n + h.num_edges());
  for (std::size_t j = 0; j < h.num_edges(); ++j) {
    const std::size_t cap = h.edges()[j].size();
    for (std::size_t v : h.edges()[j]) {
      net.add_arc(v, n + j, cap);
      net.add_arc(n + j, v, cap);
    }
  }
  return FlowResult{net.run(s.index, t.index)};
}

namespace detail {

// Joint color refinement: starts from (degree, incident-order multiset) and
// refines vertex colors by the multiset of incident hyperedge colors, where a
// hyperedge's color is the multiset of its vertex colors. Colors are shared
// between both graphs so they can be compared directly. Returns false when
// the color histograms diverge at any round.
inline bool refine_colors(const Hypergraph& a, const Hypergraph& b, std::vector<std::size_t>& ca,
                          std::vector<std::size_t>& cb) {
  using Key = std::vector<std::size_t>;
  auto histogram = [](const std::vector<std::size_t>& c) {
    std::vector<std::size_t> s = c;
    std::sort(s.begin(), s.end());
    return s;
  };

  std::map<Key, std::size_t> dict;
  auto intern = [&](Key k) { return dict.emplace(std::move(k), dict.size()).first->second; };
  auto initial = [&](const Hypergraph& h) {
    std::vector<std::size_t> c(h.num_vertices());
    for (std::size_t v = 0; v < h.num_vertices(); ++v) {
      Key k{0, h.incident(VertexId{v}).size()};
      std::vector<std::size_t> orders;
      for (std::size_t j : h.incident(VertexId{v})) orders.push_back(h.edges()[j].size());
      std::sort(orders.begin(), orders.end());
      k.insert(k.end(), orders.begin(), orders.end());
      c[v] = intern(std::move(k));
    }
    return c;
  };
  ca = initial(a);
  cb = initial(b);
  if (histogram(ca) != histogram(cb)) return false;

  auto refine = [&](const Hypergraph& h, const std::vector<std::size_t>& c) {
    std::vector<std::size_t> edge_color(h.num_edges());
    for (std::size_t j = 0; j < h.num_edges(); ++j) {
      Key k{1};
      for (std::size_t v : h.edges()[j]) k.push_back(c[v]);
      std::sort(k.begin() + 1, k.end());
      edge_color[j] = intern(std::move(k));
    }
    std::vector<std::size_t> out(c.size());
    for (std::size_t v = 0; v < c.size(); ++v) {
      Key k{2, c[v]};
      std::vector<std::size_t> inc;
      for (std::size_t j : h.incident(VertexId{v})) inc.push_back(edge_color[j]);
      std::sort(inc.begin(), inc.end());
      k.insert(k.end(), inc.begin(), inc.end());
      out[v] = intern(std::move(k));
    }
    return out;
  };

  auto classes = [](const std::vector<std::size_t>& c) { return std::set<std::size_t>(c.begin(), c.end()).size(); };
  for (std::size_t round = 0; round <= a.num_vertices(); ++round) {
    auto na = refine(a, ca);
    auto nb = refine(b, cb);
    if (histogram(na) != histogram(nb)) return false;
    const bool stable = classes(na) == classes(ca);
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  return true;
}

inline std::vector<std::vector<std::size_t>> co_occurrence_matrix(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<std::vector<std::size_t>> c(n, std::vector<std::size_t>(n, 0));
  for (const Edge& e : h.edges())
    for (std::size_t x : e)
      for (std::size_t y : e)
        if (x != y) ++c[x][y];
  return c;
}

inline std::vector<Edge> sorted_edge_multiset(const std::vector<Edge>& edges) {
  std::vector<Edge> s = edges;
  for (Edge& e : s) std::sort(e.begin(), e.end());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

// True iff some vertex bijection maps a's hyperedge multiset onto b's.
inline bool solve_ism(const Hypergraph& a, const Hypergraph& b) {
  const std::size_t n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  auto pa = degree_profile(a), pb = degree_profile(b);
  std::sort(pa.orders.begin(), pa.orders.end());
  std::sort(pb.orders.begin(), pb.orders.end());
  if (pa.orders != pb.orders) return false;

  std::vector<std::size_t> ca, cb;
  if (!detail::refine_colors(a, b, ca, cb)) return false;

  const auto co_a = detail::co_occurrence_matrix(a);
  const auto co_b = detail::co_occurrence_matrix(b);
  const auto target = detail::sorted_edge_multiset(b.edges());

  std::map<std::size_t, std::size_t> class_size;
  for (std::size_t c : ca) ++class_size[c];
  std::vector<std::size_t> sequence(n);
  std::iota(sequence.begin(), sequence.end(), 0);
  std::stable_sort(sequence.begin(), sequence.end(),
                   [&](std::size_t x, std::size_t y) { return class_size[ca[x]] < class_size[ca[y]]; });

  std::vector<std::size_t> image(n, 0);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) {
      std::vector<Edge> mapped = a.edges();
      for (Edge& e : mapped)
        for (std::size_t& v : e) v = image[v];
      return detail::sorted_edge_multiset(mapped) == target;
    }
    const std::size_t v = sequence[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || cb[w] != ca[v]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const std::size_t u = sequence[d];
        consistent = co_a[v][u] == co_b[w][image[u]];
      }
      if (!consistent) continue;
      used[w] = true;
      image[v] = w;
      if (extend(depth + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(0);
}

}  // namespace hgvl
