#pragma once

#include <filesystem>
#include <string>

#include "hypergvl/generate.hpp"
#include "hypergvl/io.hpp"
#include "hypergvl/oracle.hpp"
#include "hypergvl/text_repr.hpp"

namespace hgvl {

struct CheckReport {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// The hypergraph the text listings are written for.
inline Hypergraph worked_example() { return Hypergraph(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}); }

// Second graph for an isomorphism case: half relabelings, half a relabeled
// copy with one membership moved (isomorphic or not, the oracle decides).
inline Hypergraph isomorphism_partner(const Hypergraph& a, Rng& rng) {
  std::vector<Edge> edges = a.edges();
  if (rng.coin()) {
    Edge& e = edges[rng.below(edges.size())];
    std::vector<std::size_t> outside;
    for (std::size_t v = 0; v < a.num_vertices(); ++v)
      if (std::find(e.begin(), e.end(), v) == e.end()) outside.push_back(v);
    if (!outside.empty()) e[rng.below(e.size())] = rng.pick(outside);
  }
  return detail::scramble(Hypergraph(a.num_vertices(), std::move(edges)), rng);
}

// solve_osp / solve_omf / solve_ism against exhaustive search on `count`
// seeded instances.
inline CheckReport check_oracles(std::size_t count, std::uint64_t seed) {
  CheckReport r;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(seed, 1, i);
    const Hypergraph h = oracle::random_small(s);
    Rng rng(derive_seed(seed, 2, i));
    const VertexId a{rng.below(h.num_vertices())};
    VertexId b{rng.below(h.num_vertices() - 1)};
    if (b.index >= a.index) ++b.index;
    const std::string tag = "case " + std::to_string(i) + " " + to_json(h).dump();

    ++r.cases;
    if (solve_osp(h, a, b) != oracle::oracle_osp(h, a, b)) r.failures.push_back("OSP mismatch, " + tag);
    if (solve_omf(h, a, b) != oracle::oracle_omf(h, a, b)) r.failures.push_back("OMF mismatch, " + tag);
    const Hypergraph other = isomorphism_partner(h, rng);
    if (solve_ism(h, other) != oracle::oracle_ism(h, other))
      r.failures.push_back("ISM mismatch, " + tag + " vs " + to_json(other).dump());
  }
  return r;
}

inline std::string golden_file_name(TextFormat f) {
  std::string name = lowercase(text_format_name(f));
  std::replace(name.begin(), name.end(), '-', '_');
  return name + ".txt";
}

// Byte comparison of each rendering of the worked example with its golden file.
inline CheckReport check_golden(const std::filesystem::path& dir) {
  CheckReport r;
  const Hypergraph h = worked_example();
  for (TextFormat f : kAllTextFormats) {
    ++r.cases;
    const auto path = dir / golden_file_name(f);
    std::string expected;
    try {
      expected = read_file(path.string());
    } catch (const std::exception& e) {
      r.failures.push_back(e.what());
      continue;
    }
    const std::string got = render_text(h, f);
    if (got != expected) {
      std::size_t at = 0;
      while (at < got.size() && at < expected.size() && got[at] == expected[at]) ++at;
      r.failures.push_back(std::string(text_format_name(f)) + " differs from " + path.string() + " at byte " +
                           std::to_string(at));
    }
  }
  return r;
}

}  // namespace hgvl
