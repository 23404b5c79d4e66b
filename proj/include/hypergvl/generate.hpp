#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "hypergvl/core.hpp"
#include "hypergvl/rng.hpp"
#include "hypergvl/solve.hpp"
#include "hypergvl/verify.hpp"

namespace hgvl {

enum class ScaleClass { small, medium, large };
enum class Source { synthetic, real };

struct VertexRange {
  std::size_t lo;
  std::size_t hi;
};

// Boundary counts 10 and 15 belong to the lower class.
inline VertexRange vertex_range(ScaleClass s) {
  switch (s) {
    case ScaleClass::small: return {5, 10};
    case ScaleClass::medium: return {11, 15};
    case ScaleClass::large: return {16, 20};
  }
  return {5, 10};
}

inline std::optional<ScaleClass> classify_scale(std::size_t n) {
  for (ScaleClass s : {ScaleClass::small, ScaleClass::medium, ScaleClass::large}) {
    auto r = vertex_range(s);
    if (n >= r.lo && n <= r.hi) return s;
  }
  return std::nullopt;
}

inline std::string scale_name(ScaleClass s) {
  switch (s) {
    case ScaleClass::small: return "small";
    case ScaleClass::medium: return "medium";
    case ScaleClass::large: return "large";
  }
  return "?";
}

inline ScaleClass parse_scale(const std::string& s) {
  if (s == "small") return ScaleClass::small;
  if (s == "medium") return ScaleClass::medium;
  if (s == "large") return ScaleClass::large;
  throw std::invalid_argument("unknown scale '" + s + "'");
}

inline std::string source_name(Source s) { return s == Source::synthetic ? "synthetic" : "real"; }

inline Source parse_source(const std::string& s) {
  if (s == "synthetic") return Source::synthetic;
  if (s == "real") return Source::real;
  throw std::invalid_argument("unknown source '" + s + "'");
}

struct GenSpec {
  ScaleClass scale = ScaleClass::small;
  Source source = Source::synthetic;
  std::uint64_t seed = 0;
};

// Synthetic hyperedge-count band [ceil(0.2|V|), floor(1.5|V|)].
inline std::size_t min_edges(std::size_t n) { return (n + 4) / 5; }
inline std::size_t max_edges(std::size_t n) { return (3 * n) / 2; }
inline bool within_density(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  return h.num_edges() >= min_edges(n) && h.num_edges() <= max_edges(n);
}

inline std::size_t order_cap(std::size_t n) { return std::min<std::size_t>(6, n); }

// Ingested real hypergraph. Isolated vertices are dropped on construction so
// every component has at least two vertices.
class SourcePool {
 public:
  SourcePool(const Hypergraph& full, std::string provenance) : provenance_(std::move(provenance)) {
    std::vector<std::size_t> remap(full.num_vertices(), 0);
    std::size_t kept = 0;
    for (std::size_t v = 0; v < full.num_vertices(); ++v)
      remap[v] = full.incident(VertexId{v}).empty() ? 0 : kept++;
    if (kept < 2) throw std::invalid_argument("source pool has no hyperedges");
    std::vector<Edge> edges = full.edges();
    for (Edge& e : edges)
      for (std::size_t& v : e) v = remap[v];
    graph_ = Hypergraph(kept, std::move(edges));
    auto labels = component_labels(graph_);
    std::vector<std::size_t> sizes(num_components(graph_), 0);
    for (std::size_t l : labels) ++sizes[l];
    component_size_.resize(kept);
    for (std::size_t v = 0; v < kept; ++v) component_size_[v] = sizes[labels[v]];
  }

  const Hypergraph& graph() const { return graph_; }
  const std::string& provenance() const { return provenance_; }
  std::size_t component_size(std::size_t v) const { return component_size_[v]; }

 private:
  Hypergraph graph_;
  std::string provenance_;
  std::vector<std::size_t> component_size_;
};

struct ShcInstance {
  Hypergraph graph;
  HyperedgeSequence cycle;
};

struct HhmInstance {
  Hypergraph graph;
  VertexId start;
  VertexId end;
  HyperedgeSequence path;
};

struct ColoringInstance {
  Hypergraph graph;
  VertexColoring coloring;
};

struct IsmPair {
  Hypergraph first;
  Hypergraph second;
  bool isomorphic = false;
};

// Renumbers vertices so `order[i]` becomes vertex i, then sorts hyperedges by
// their relabeled vertex lists (stable, so equal hyperedges keep their order).
inline Hypergraph reindex_canonical(const Hypergraph& h, const std::vector<std::size_t>& order) {
  const std::size_t n = h.num_vertices();
  if (order.size() != n) throw contract_error("reindex_canonical: order is not a permutation");
  std::vector<std::size_t> new_id(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || new_id[order[i]] != n) throw contract_error("reindex_canonical: order is not a permutation");
    new_id[order[i]] = i;
  }
  std::vector<Edge> edges = h.edges();
  for (Edge& e : edges) {
    for (std::size_t& v : e) v = new_id[v];
    std::sort(e.begin(), e.end());
  }
  std::stable_sort(edges.begin(), edges.end());
  return Hypergraph(n, std::move(edges));
}

namespace detail {

// perm[old] = new vertex id; hyperedge list order is also shuffled.
// `edge_perm[old] = new` is reported for certificate remapping.
inline Hypergraph scramble(const Hypergraph& h, Rng& rng, std::vector<std::size_t>* vertex_perm = nullptr,
                           std::vector<std::size_t>* edge_perm = nullptr) {
  auto vp = rng.permutation(h.num_vertices());
  auto ep = rng.permutation(h.num_edges());
  std::vector<Edge> edges(h.num_edges());
  for (std::size_t j = 0; j < h.num_edges(); ++j) {
    Edge e = h.edges()[j];
    for (std::size_t& v : e) v = vp[v];
    edges[ep[j]] = std::move(e);
  }
  if (vertex_perm) *vertex_perm = vp;
  if (edge_perm) *edge_perm = ep;
  return Hypergraph(h.num_vertices(), std::move(edges));
}

inline Edge random_edge(Rng& rng, std::size_t n, std::size_t k) {
  Edge e = rng.sample(n, k);
  std::sort(e.begin(), e.end());
  return e;
}

// Adds order-2 (or order-3 when `admissible` rejects the pair) bridges between
// two random components until the hypergraph is connected.
inline void bridge_components(std::size_t n, std::vector<Edge>& edges, Rng& rng,
                              const std::function<bool(const Edge&)>& admissible) {
  for (;;) {
    Hypergraph h(n, edges);
    auto labels = component_labels(h);
    const std::size_t count = num_components(h);
    if (count == 1) return;
    std::vector<std::vector<std::size_t>> members(count);
    for (std::size_t v = 0; v < n; ++v) members[labels[v]].push_back(v);
    auto pair = rng.sample(count, 2);
    Edge bridge{rng.pick(members[pair[0]]), rng.pick(members[pair[1]])};
    std::sort(bridge.begin(), bridge.end());
    while (admissible && !admissible(bridge)) {
      Edge wider{bridge[0], bridge[1], rng.below(n)};
      std::sort(wider.begin(), wider.end());
      if (std::adjacent_find(wider.begin(), wider.end()) == wider.end() && admissible(wider)) bridge = wider;
    }
    edges.push_back(std::move(bridge));
  }
}

inline constexpr std::size_t kDensityAttempts = 1000;

inline Hypergraph random_connected(std::size_t n, Rng& rng, const std::function<bool(const Edge&)>& admissible) {
  const std::size_t cap = order_cap(n);
  for (std::size_t attempt = 0; attempt < kDensityAttempts; ++attempt) {
    const std::size_t m = rng.uniform(min_edges(n), max_edges(n));
    std::vector<Edge> edges;
    while (edges.size() < m) {
      Edge e = random_edge(rng, n, rng.uniform(2, cap));
      if (admissible && !admissible(e)) continue;
      edges.push_back(std::move(e));
    }
    bridge_components(n, edges, rng, admissible);
    if (edges.size() <= max_edges(n)) return Hypergraph(n, std::move(edges));
  }
  throw generation_error("random connected generation exceeded its retry budget");
}

}  // namespace detail

// Random connected hypergraph: |V| uniform in the scale range, |E| uniform in
// the density band, orders uniform in [2, min(6, |V|)]; disconnected results
// are repaired with bridging hyperedges and redrawn if the repair overflows
// the band.
inline Hypergraph gen_random_connected(const GenSpec& spec) {
  Rng rng(spec.seed);
  const auto range = vertex_range(spec.scale);
  const std::size_t n = rng.uniform(range.lo, range.hi);
  return detail::random_connected(n, rng, {});
}

// Strict-hypercycle constructor: a ring of L hyperedges whose consecutive
// members meet in exactly one ring vertex, plus distractor hyperedges that
// never touch the backbone's own vertex lists.
inline ShcInstance gen_shc_instance(const GenSpec& spec) {
  Rng rng(spec.seed);
  const auto range = vertex_range(spec.scale);
  const std::size_t n = rng.uniform(range.lo, range.hi);
  const std::size_t cap = order_cap(n);
  const std::size_t m = rng.uniform(std::max<std::size_t>(3, min_edges(n)), max_edges(n));
  const std::size_t ring_len = rng.uniform(3, std::min(m, n));
  const std::size_t distractors = m - ring_len;

  auto verts = rng.permutation(n);
  // Containers 0..L-1 are backbone hyperedges, L.. are distractors.
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < ring_len; ++i) slots.insert(slots.end(), cap - 2, i);
  for (std::size_t j = 0; j < distractors; ++j) slots.insert(slots.end(), cap - 1, ring_len + j);
  rng.shuffle(slots);
  std::vector<Edge> fresh(m);
  for (std::size_t i = ring_len; i < n; ++i) fresh[slots[i - ring_len]].push_back(verts[i]);

  std::vector<Edge> edges;
  std::vector<std::size_t> covered;
  for (std::size_t i = 0; i < ring_len; ++i) {
    Edge e{verts[i], verts[(i + 1) % ring_len]};
    e.insert(e.end(), fresh[i].begin(), fresh[i].end());
    covered.insert(covered.end(), e.begin(), e.end());
    edges.push_back(std::move(e));
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());

  for (std::size_t j = 0; j < distractors; ++j) {
    const Edge& own = fresh[ring_len + j];
    const std::size_t k = rng.uniform(std::max<std::size_t>(2, own.size() + 1), std::min(cap, own.size() + covered.size()));
    Edge e = own;
    auto picks = rng.sample(covered.size(), k - own.size());
    for (std::size_t p : picks) e.push_back(covered[p]);
    edges.push_back(std::move(e));
    covered.insert(covered.end(), own.begin(), own.end());
    std::sort(covered.begin(), covered.end());
  }

  auto ep = rng.permutation(m);
  std::vector<Edge> shuffled(m);
  for (std::size_t j = 0; j < m; ++j) shuffled[ep[j]] = std::move(edges[j]);
  ShcInstance out{Hypergraph(n, std::move(shuffled)), {}};
  for (std::size_t i = 0; i < ring_len; ++i) out.cycle.push_back(HyperedgeId{ep[i]});
  return out;
}

// Chains hyperedges along `perm`: hyperedge b covers `steps[b]` consecutive
// steps of the vertex permutation and shares its last vertex with the next.
inline HhmInstance hhm_backbone(const std::vector<std::size_t>& perm, const std::vector<std::size_t>& steps) {
  const std::size_t n = perm.size();
  std::vector<Edge> edges;
  HyperedgeSequence path;
  std::size_t pos = 0;
  for (std::size_t b = 0; b < steps.size(); ++b) {
    if (steps[b] == 0 || pos + steps[b] > n - 1)
      throw contract_error("hhm_backbone: step lengths must be positive and sum to |V|-1");
    edges.emplace_back(perm.begin() + static_cast<std::ptrdiff_t>(pos),
                       perm.begin() + static_cast<std::ptrdiff_t>(pos + steps[b] + 1));
    path.insert(path.end(), steps[b], HyperedgeId{b});
    pos += steps[b];
  }
  if (pos + 1 != n) throw contract_error("hhm_backbone: step lengths must sum to |V|-1");
  return HhmInstance{Hypergraph(n, std::move(edges)), VertexId{perm.front()}, VertexId{perm.back()}, path};
}

// Hamiltonian-path constructor: a random vertex permutation is covered by a
// chain of backbone hyperedges; distractors are random hyperedges.
inline HhmInstance gen_hhm_instance(const GenSpec& spec) {
  Rng rng(spec.seed);
  const auto range = vertex_range(spec.scale);
  const std::size_t n = rng.uniform(range.lo, range.hi);
  const std::size_t cap = order_cap(n);
  const std::size_t m = rng.uniform(min_edges(n), max_edges(n));
  const auto perm = rng.permutation(n);

  const std::size_t max_step = cap - 1;
  const std::size_t backbone_min = (n - 1 + max_step - 1) / max_step;
  const std::size_t backbone = rng.uniform(backbone_min, std::min(m, n - 1));
  std::vector<std::size_t> steps(backbone, 1);
  for (std::size_t extra = n - 1 - backbone; extra > 0; --extra) {
    std::vector<std::size_t> open;
    for (std::size_t b = 0; b < backbone; ++b)
      if (steps[b] < max_step) open.push_back(b);
    ++steps[rng.pick(open)];
  }
  HhmInstance chain = hhm_backbone(perm, steps);

  std::vector<Edge> edges = chain.graph.edges();
  while (edges.size() < m) edges.push_back(detail::random_edge(rng, n, rng.uniform(2, cap)));
  auto ep = rng.permutation(m);
  std::vector<Edge> shuffled(m);
  for (std::size_t j = 0; j < m; ++j) shuffled[ep[j]] = std::move(edges[j]);
  for (HyperedgeId& e : chain.path) e = HyperedgeId{ep[e.index]};
  chain.graph = Hypergraph(n, std::move(shuffled));
  return chain;
}

inline bool spans_two_colors(const Edge& e, const VertexColoring& c) {
  return std::any_of(e.begin(), e.end(), [&](std::size_t v) { return c.color[v] != c.color[e.front()]; });
}

// 3-coloring constructor: vertices are pre-assigned to three nonempty color
// classes and only hyperedges spanning at least two classes are admitted.
inline ColoringInstance gen_3cl_instance(const GenSpec& spec) {
  Rng rng(spec.seed);
  const auto range = vertex_range(spec.scale);
  const std::size_t n = rng.uniform(range.lo, range.hi);
  VertexColoring classes{std::vector<int>(n, 0)};
  auto order = rng.permutation(n);
  for (std::size_t i = 0; i < n; ++i)
    classes.color[order[i]] = i < kNumColors ? static_cast<int>(i) : static_cast<int>(rng.below(kNumColors));
  Hypergraph h = detail::random_connected(n, rng, [&](const Edge& e) { return spans_two_colors(e, classes); });
  return ColoringInstance{std::move(h), std::move(classes)};
}

namespace detail {

// One random structural edit: move a vertex between hyperedges, or grow or
// shrink one hyperedge by a vertex. Returns nullopt when the drawn edit does
// not apply.
inline std::optional<Hypergraph> mutate(const Hypergraph& h, Rng& rng, std::size_t max_order) {
  std::vector<Edge> edges = h.edges();
  const std::size_t n = h.num_vertices();
  const std::size_t j = rng.below(edges.size());
  Edge& e = edges[j];
  switch (rng.below(2)) {
    case 0: {
      if (edges.size() < 2 || e.size() < 3) return std::nullopt;
      std::size_t k = rng.below(edges.size() - 1);
      if (k >= j) ++k;
      Edge& f = edges[k];
      const std::size_t v = rng.pick(e);
      if (std::binary_search(f.begin(), f.end(), v) || f.size() >= max_order) return std::nullopt;
      e.erase(std::find(e.begin(), e.end(), v));
      f.push_back(v);
      break;
    }
    default: {
      if (rng.coin()) {
        if (e.size() >= std::min(max_order, n)) return std::nullopt;
        std::size_t v;
        do {
          v = rng.below(n);
        } while (std::binary_search(e.begin(), e.end(), v));
        e.push_back(v);
      } else {
        if (e.size() < 3) return std::nullopt;
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(rng.below(e.size())));
      }
      break;
    }
  }
  Hypergraph out(n, std::move(edges));
  if (!is_connected(out)) return std::nullopt;
  return out;
}

inline constexpr std::size_t kMutationBudget = 1000;

}  // namespace detail

// Isomorphism pair around `base`: with probability 1/2 a random relabeling,
// otherwise a relabeled mutation confirmed non-isomorphic.
inline IsmPair make_ism_pair(const Hypergraph& base, std::uint64_t seed, std::size_t max_order) {
  Rng rng(seed);
  IsmPair pair{base, base, rng.coin()};
  if (pair.isomorphic) {
    pair.second = detail::scramble(base, rng);
    return pair;
  }
  for (std::size_t attempt = 0; attempt < detail::kMutationBudget; ++attempt) {
    auto mutant = detail::mutate(base, rng, max_order);
    if (!mutant || solve_ism(base, *mutant)) continue;
    pair.second = detail::scramble(*mutant, rng);
    return pair;
  }
  // Some bases have no connected same-size variant at all (one hyperedge
  // spanning every vertex). Change the hyperedge count instead.
  std::vector<Edge> edges = base.edges();
  const std::size_t n = base.num_vertices();
  if (edges.size() < max_edges(n)) {
    edges.push_back(detail::random_edge(rng, n, rng.uniform(2, std::min(max_order, n))));
    pair.second = detail::scramble(Hypergraph(n, std::move(edges)), rng);
    return pair;
  }
  for (std::size_t j : rng.permutation(edges.size())) {
    std::vector<Edge> fewer = edges;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(j));
    Hypergraph candidate(n, std::move(fewer));
    if (!is_connected(candidate)) continue;
    pair.second = detail::scramble(candidate, rng);
    return pair;
  }
  throw generation_error("no non-isomorphic mutation found within the retry budget");
}

inline constexpr std::size_t kSubsampleWalks = 10000;

// Random-walk sub-hypergraph of a real pool: vertex -> random incident
// hyperedge -> random member, until the target vertex count is visited.
// Induced hyperedges keep restrictions of order >= 2; ids follow visitation
// order. `accept` lets callers demand a feasibility certificate.
inline Hypergraph subsample_real(const SourcePool& pool, const GenSpec& spec,
                                 const std::function<bool(const Hypergraph&)>& accept = {}) {
  Rng rng(spec.seed);
  const Hypergraph& full = pool.graph();
  const auto range = vertex_range(spec.scale);
  const std::size_t target = rng.uniform(range.lo, range.hi);

  std::vector<std::size_t> seeds;
  for (std::size_t v = 0; v < full.num_vertices(); ++v)
    if (pool.component_size(v) >= target) seeds.push_back(v);
  if (seeds.empty())
    throw generation_error("source pool '" + pool.provenance() + "' has no component with " + std::to_string(target) +
                           " vertices");

  std::vector<std::size_t> local(full.num_vertices(), full.num_vertices());
  for (std::size_t walk = 0; walk < kSubsampleWalks; ++walk) {
    std::vector<std::size_t> visited;
    std::size_t cur = rng.pick(seeds);
    visited.push_back(cur);
    local[cur] = 0;
    for (std::size_t step = 0; visited.size() < target && step < 200 * target; ++step) {
      const Edge& e = full.edges()[rng.pick(full.incident(VertexId{cur}))];
      cur = rng.pick(e);
      if (local[cur] == full.num_vertices()) {
        local[cur] = visited.size();
        visited.push_back(cur);
      }
    }

    std::optional<Hypergraph> sub;
    if (visited.size() == target) {
      std::vector<std::size_t> touched;
      for (std::size_t v : visited)
        for (std::size_t j : full.incident(VertexId{v})) touched.push_back(j);
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      std::vector<Edge> edges;
      for (std::size_t j : touched) {
        Edge r;
        for (std::size_t v : full.edges()[j])
          if (local[v] != full.num_vertices()) r.push_back(v);
        if (r.size() >= 2) edges.push_back(std::move(r));
      }
      // Built on pool ids restricted to the visit set, then renumbered.
      std::vector<std::size_t> order(target);
      for (Edge& e : edges)
        for (std::size_t& v : e) v = local[v];
      for (std::size_t i = 0; i < target; ++i) order[i] = i;
      sub = reindex_canonical(Hypergraph(target, std::move(edges)), order);
    }
    for (std::size_t v : visited) local[v] = full.num_vertices();
    if (sub && (!accept || accept(*sub))) return *sub;
  }
  throw generation_error("subsampling '" + pool.provenance() + "' exhausted " + std::to_string(kSubsampleWalks) +
                         " walks");
}

// Deterministic stand-in for an ingested co-authorship network: 600 vertices
// in communities of 30, skewed hyperedge orders, sparse cross-community links.
inline SourcePool builtin_pool() {
  Rng rng(0x7e57ab1e0f5eedULL);
  constexpr std::size_t communities = 20, size = 30, n = communities * size;
  std::vector<Edge> edges;
  const std::size_t order_table[] = {2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 5, 5, 6};
  for (std::size_t i = 0; i < 900; ++i) {
    const std::size_t c = rng.below(communities);
    const std::size_t k = order_table[rng.below(std::size(order_table))];
    Edge e;
    for (std::size_t v : rng.sample(size, k)) e.push_back(c * size + v);
    if (rng.below(10) == 0) e.back() = ((c + 1) % communities) * size + rng.below(size);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() >= 2) edges.push_back(std::move(e));
  }
  for (std::size_t c = 0; c + 1 < communities; ++c)
    edges.push_back({c * size + rng.below(size), (c + 1) * size + rng.below(size)});
  detail::bridge_components(n, edges, rng, {});
  return SourcePool(Hypergraph(n, std::move(edges)), "builtin:coauthor-like");
}

}  // namespace hgvl
