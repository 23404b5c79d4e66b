// End-to-end acceptance run. One PASS/FAIL line per criterion; exit status 1
// if any fails. argv[1] is a scratch directory for emitted corpora.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <regex>
#include <thread>

#include "hypergvl/hypergvl.hpp"
#include "hypergvl/selfcheck.hpp"

using namespace hgvl;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

const SourcePool& pool() {
  static const SourcePool p = builtin_pool();
  return p;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

std::string fixed2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

// |observed - expected| <= 3 sigma for each bucket of a multinomial draw.
bool within_three_sigma(const std::vector<std::size_t>& counts, const std::vector<double>& weights) {
  double total_w = 0;
  std::size_t n = 0;
  for (double w : weights) total_w += w;
  for (std::size_t c : counts) n += c;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double p = weights[i] / total_w;
    const double sigma = std::sqrt(double(n) * p * (1 - p));
    if (std::abs(double(counts[i]) - double(n) * p) > 3 * sigma) return false;
  }
  return true;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto report = check_oracles(500, 2024);
  const double secs = seconds_since(t0);
  for (const auto& f : report.failures) o.require(false, f);
  o.require(report.cases == 500, "ran " + std::to_string(report.cases) + " cases");
  o.require(secs < 60, "took " + fixed2(secs) + " s");
  o.detail = std::to_string(report.cases) + " instances, " + std::to_string(report.failures.size()) +
             " mismatches, " + fixed2(secs) + " s";
  return o;
}

Outcome constructor_soundness() {
  Outcome o;
  constexpr std::size_t n = 1000;
  std::vector<char> shc(n), hhm(n), col(n), ism(n), ism_label(n);
  parallel_for(n, jobs(), [&](std::size_t i) {
    const GenSpec spec{static_cast<ScaleClass>(i % 3), Source::synthetic, derive_seed(7, i)};
    const auto a = gen_shc_instance(spec);
    shc[i] = verify_shc(a.graph, a.cycle) && a.cycle.size() >= 3;
    const auto b = gen_hhm_instance(spec);
    hhm[i] = verify_hhm(b.graph, b.path, b.start, b.end);
    const auto c = gen_3cl_instance(spec);
    col[i] = verify_3cl(c.graph, c.coloring);
    const auto base = gen_random_connected(spec);
    const auto pair = make_ism_pair(base, derive_seed(spec.seed, 3), order_cap(base.num_vertices()));
    ism[i] = solve_ism(pair.first, pair.second) == pair.isomorphic;
    ism_label[i] = pair.isomorphic;
  });
  auto count = [](const std::vector<char>& v) { return std::size_t(std::count(v.begin(), v.end(), 1)); };
  o.require(count(shc) == n, "SHC certificates rejected: " + std::to_string(n - count(shc)));
  o.require(count(hhm) == n, "HHM certificates rejected: " + std::to_string(n - count(hhm)));
  o.require(count(col) == n, "3-CL certificates rejected: " + std::to_string(n - count(col)));
  o.require(count(ism) == n, "ISM labels disagreeing: " + std::to_string(n - count(ism)));
  const std::size_t yes = count(ism_label);
  o.require(within_three_sigma({yes, n - yes}, {1, 1}), "ISM label balance " + std::to_string(yes) + "/" +
                                                           std::to_string(n));
  o.detail = "SHC " + std::to_string(count(shc)) + "/1000, HHM " + std::to_string(count(hhm)) + "/1000, 3-CL " +
             std::to_string(count(col)) + "/1000, ISM " + std::to_string(count(ism)) + "/1000 (" +
             std::to_string(yes) + " isomorphic)";
  return o;
}

Outcome structural_constraints() {
  Outcome o;
  // 334 per task through the corpus planner, first 4000 requests.
  auto reqs = plan_requests(CorpusPlan::uniform(334, 11));
  reqs.resize(4000);
  std::vector<MetaProblem> metas(reqs.size());
  parallel_for(reqs.size(), jobs(), [&](std::size_t i) { metas[i] = generate_meta(reqs[i], pool()); });

  std::vector<std::size_t> scales(3), sources(2);
  std::size_t graphs = 0, synthetic = 0;
  for (std::size_t i = 0; i < metas.size(); ++i) {
    const auto& m = metas[i];
    ++scales[static_cast<std::size_t>(m.scale)];
    ++sources[static_cast<std::size_t>(m.source)];
    std::vector<const Hypergraph*> gs{&m.graph};
    if (m.second) gs.push_back(&*m.second);
    for (const Hypergraph* g : gs) {
      ++graphs;
      o.require(is_connected(*g), m.id + " disconnected");
      o.require(classify_scale(g->num_vertices()) == m.scale, m.id + " outside its scale class");
      if (m.source == Source::synthetic) {
        ++synthetic;
        o.require(within_density(*g), m.id + " has " + std::to_string(g->num_edges()) + " hyperedges on " +
                                          std::to_string(g->num_vertices()) + " vertices");
      }
    }
  }
  o.require(within_three_sigma(scales, {1, 2, 1}), "scale mix off");
  o.require(within_three_sigma(sources, {1, 1}), "source mix off");
  o.detail = std::to_string(metas.size()) + " instances (" + std::to_string(graphs) + " graphs, " +
             std::to_string(synthetic) + " synthetic), scales " + std::to_string(scales[0]) + ":" +
             std::to_string(scales[1]) + ":" + std::to_string(scales[2]) + ", sources " + std::to_string(sources[0]) +
             ":" + std::to_string(sources[1]);
  return o;
}

Outcome serializer_fidelity() {
  Outcome o;
  const auto golden = check_golden(HYPERGVL_FIXTURE_DIR);
  for (const auto& f : golden.failures) o.require(false, f);
  o.require(golden.cases == 7, "golden cases " + std::to_string(golden.cases));
  std::size_t trips = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto h = gen_random_connected({static_cast<ScaleClass>(seed % 3), Source::synthetic, derive_seed(5, seed)});
    try {
      o.require(parse_nset(render_text(h, TextFormat::N_Set)) == h, "N-Set round trip, seed " + std::to_string(seed));
      o.require(parse_incmat(render_text(h, TextFormat::Inc_Mat)) == h,
                "Inc-Mat round trip, seed " + std::to_string(seed));
      o.require(parse_honeigh(render_text(h, TextFormat::HO_Neigh)) == h,
                "HO-Neigh round trip, seed " + std::to_string(seed));
    } catch (const parse_error& e) {
      o.require(false, std::string("seed ") + std::to_string(seed) + ": " + e.what());
    }
    ++trips;
  }
  o.detail = std::to_string(golden.cases - golden.failures.size()) + "/7 golden files, " + std::to_string(trips) +
             " round trips x 3 formats";
  return o;
}

bool same_bytes(const fs::path& a, const fs::path& b) { return read_file(a.string()) == read_file(b.string()); }

std::size_t line_count(const fs::path& p) {
  const std::string s = read_file(p.string());
  return std::size_t(std::count(s.begin(), s.end(), '\n'));
}

bool same_tree(const fs::path& a, const fs::path& b) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(a))
    if (e.is_regular_file()) files.push_back(fs::relative(e.path(), a));
  std::size_t other = 0;
  for (const auto& e : fs::recursive_directory_iterator(b))
    if (e.is_regular_file()) ++other;
  if (other != files.size()) return false;
  for (const auto& f : files)
    if (!fs::exists(b / f) || !same_bytes(a / f, b / f)) return false;
  return true;
}

Outcome corpus_arithmetic(const fs::path& work) {
  Outcome o;
  const auto big_a = work / "per200-a", big_b = work / "per200-b";
  const auto t0 = Clock::now();
  const auto big = emit_corpus(CorpusPlan::uniform(200, 42), big_a, pool(), jobs(), false);
  const double big_secs = seconds_since(t0);
  emit_corpus(CorpusPlan::uniform(200, 42), big_b, pool(), jobs(), false);
  o.require(big.metas == 2400, "metas " + std::to_string(big.metas));
  o.require(line_count(big_a / "metas.jsonl") == 2400, "metas.jsonl lines");
  o.require(line_count(big_a / "manifest.jsonl") == 84000, "manifest lines " +
                                                               std::to_string(line_count(big_a / "manifest.jsonl")));
  o.require(same_bytes(big_a / "manifest.jsonl", big_b / "manifest.jsonl"), "per-task 200 manifests differ");

  const auto small_a = work / "per10-a", small_b = work / "per10-b";
  const auto t1 = Clock::now();
  const auto small = emit_corpus(CorpusPlan::uniform(10, 42), small_a, pool(), jobs(), true);
  const double small_secs = seconds_since(t1);
  emit_corpus(CorpusPlan::uniform(10, 42), small_b, pool(), jobs(), true);
  o.require(small.samples == 4200 && line_count(small_a / "manifest.jsonl") == 4200, "per-task 10 sample count");
  o.require(small_secs < 300, "per-task 10 took " + fixed2(small_secs) + " s");
  o.require(same_tree(small_a, small_b), "per-task 10 reruns differ");
  std::size_t svgs = 0;
  for (const auto& e : fs::directory_iterator(small_a / "images")) svgs += e.path().extension() == ".svg";
  o.require(svgs == 600, "svg files " + std::to_string(svgs));

  o.detail = "2400 metas / " + std::to_string(line_count(big_a / "manifest.jsonl")) + " samples in " +
             fixed2(big_secs) + " s; 4200 samples + " + std::to_string(svgs) + " images in " + fixed2(small_secs) +
             " s; reruns byte-identical";
  return o;
}

std::size_t count_class(const std::string& svg, const std::string& cls) {
  const std::string needle = "class=\"" + cls + "\"";
  std::size_t n = 0;
  for (auto at = svg.find(needle); at != std::string::npos; at = svg.find(needle, at + 1)) ++n;
  return n;
}

std::vector<std::string> labels_of(const std::string& svg, const std::string& cls) {
  const std::regex text("<text class=\"" + cls + "\"[^>]*>([^<]*)</text>");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), text); it != std::sregex_iterator(); ++it)
    out.push_back((*it)[1]);
  return out;
}

// Pairs listed by the N-Pair serializer, counted from its text.
std::size_t npair_pairs(const Hypergraph& h) {
  const std::string text = render_text(h, TextFormat::N_Pair);
  const std::string body = text.substr(text.find(" are: "));
  std::size_t n = 0;
  for (auto at = body.find("(v"); at != std::string::npos; at = body.find("(v", at + 1)) ++n;
  return n;
}

Outcome visual_invariants() {
  Outcome o;
  constexpr std::size_t per_format = 200;
  std::size_t renders = 0;
  for (VisualFormat f : kAllVisualFormats) {
    for (std::size_t i = 0; i < per_format; ++i) {
      const auto h = gen_random_connected({static_cast<ScaleClass>(i % 3), static_cast<Source>(0), derive_seed(13, i)});
      RenderConfig cfg;
      cfg.seed = derive_seed(17, i);
      const auto svg = render_svg(h, f, cfg);
      const std::string tag = std::string(visual_format_name(f)) + " #" + std::to_string(i);
      ++renders;
      o.require(svg == render_svg(h, f, cfg), tag + " not deterministic");
      std::vector<std::string> vnames, enames;
      for (std::size_t v = 0; v < h.num_vertices(); ++v) vnames.push_back(to_string(VertexId{v}));
      for (std::size_t e = 0; e < h.num_edges(); ++e) enames.push_back(to_string(HyperedgeId{e}));
      o.require(labels_of(svg, "vertex-label") == vnames, tag + " vertex labels");
      if (f == VisualFormat::Cli_Exp) {
        o.require(count_class(svg, "clique-edge") == npair_pairs(h), tag + " clique segments");
      } else {
        o.require(labels_of(svg, "edge-label") == enames, tag + " hyperedge labels");
      }
      if (f == VisualFormat::Bi_Inc || f == VisualFormat::Sh_Inc || f == VisualFormat::St_Inc) {
        std::size_t incidences = 0;
        for (const Edge& e : h.edges()) incidences += e.size();
        o.require(count_class(svg, "incidence") == incidences, tag + " incidence lines");
      }
    }
  }
  const auto hstar = render_svg(worked_example(), VisualFormat::Cli_Exp);
  const std::size_t segs = count_class(hstar, "clique-edge");
  o.require(segs == 7, "worked example has " + std::to_string(segs) + " Cli-Exp segments");
  o.detail = std::to_string(renders) + " renders over 5 formats; worked example Cli-Exp segments " +
             std::to_string(segs);
  return o;
}

Outcome grading_consistency(const fs::path& work) {
  Outcome o;
  const auto dir = work / "per10-a";
  const Manifest manifest = load_manifest((dir / "manifest.jsonl").string());
  std::map<std::string, MetaProblem> metas;
  for (const json& j : read_jsonl((dir / "metas.jsonl").string())) {
    auto m = meta_from_json(j);
    metas.emplace(m.id, std::move(m));
  }
  const ParseOptions strict{false, true};
  std::size_t right = 0, corrupted_right = 0;
  std::map<Task, std::size_t> corrupted_per_task;
  for (const auto& [id, s] : manifest) {
    const MetaProblem& m = metas.at(s.meta_id);
    const auto good = grade_sample(s, "Ans: " + render_canonical_answer(s.task, m.truth), strict);
    if (good.correct) ++right;
    else o.require(false, id + " canonical answer graded wrong");
    const Answer bad = corrupt_answer(m, derive_seed(m.seed, 9));
    const auto wrong = grade_sample(s, "Ans: " + render_canonical_answer(s.task, bad), strict);
    o.require(!wrong.parse_failure, id + " corrupted answer did not parse");
    if (wrong.correct) {
      ++corrupted_right;
      o.require(false, id + " corrupted answer graded right");
    }
    ++corrupted_per_task[s.task];
  }
  for (Task t : {Task::ThreeCL, Task::SHC, Task::HHM})
    o.require(corrupted_per_task[t] > 0, std::string(task_name(t)) + " has no corrupted items");
  o.require(manifest.size() == 4200, "manifest has " + std::to_string(manifest.size()) + " samples");
  o.detail = "canonical " + fixed2(100.0 * double(right) / double(manifest.size())) + "%, corrupted " +
             fixed2(100.0 * double(corrupted_right) / double(manifest.size())) + "% over " +
             std::to_string(manifest.size()) + " samples";
  return o;
}

Outcome prm_construction() {
  Outcome o;
  const auto a = generate_meta({Task::OSP, 0, ScaleClass::small, Source::synthetic, 3, false}, pool());
  const auto b = generate_meta({Task::SHC, 0, ScaleClass::medium, Source::synthetic, 3, false}, pool());
  const auto c = generate_meta({Task::VC, 0, ScaleClass::large, Source::synthetic, 3, false}, pool());
  std::vector<QASample> all;
  for (const auto* m : {&a, &b, &c})
    for (auto& s : expand_samples(*m)) all.push_back(std::move(s));
  const Manifest manifest = index_manifest(all);

  // Per combo: how many runs and how many of them are right.
  auto add = [&](std::vector<GradeRecord>& out, const MetaProblem& m, const std::string& combo, std::size_t right,
                 std::size_t runs) {
    const RepCombo rc = parse_combo(combo);
    const std::string id = m.id + "__" + std::string(text_format_name(rc.text)) + "__" +
                           std::string(visual_format_name(rc.visual));
    for (std::size_t k = 0; k < runs; ++k) out.push_back(GradeRecord{id, std::nullopt, false, k < right, {}});
  };
  std::vector<GradeRecord> recs;
  for (const RepCombo& rc : all_combos()) {
    const std::string name = combo_name(rc);
    // a: two combos at 3/3, the rest at most 2/3 -> tie
    if (name == "N-Set+Enc-Hy" || name == "Inc-Mat+St-Inc") add(recs, a, name, 3, 3);
    else add(recs, a, name, (static_cast<std::size_t>(rc.text) + static_cast<std::size_t>(rc.visual)) % 3, 3);
    // b: 2/3 beats 3/5 and the 1/2 everywhere else
    if (name == "HO-Neigh+Bi-Inc") add(recs, b, name, 2, 3);
    else if (name == "LO-Inc+Cli-Exp") add(recs, b, name, 3, 5);
    else add(recs, b, name, 1, 2);
    // c: all wrong
    add(recs, c, name, 0, 1);
  }
  const auto prm = build_prm(recs, manifest);

  std::map<std::string, std::vector<std::string>> got;
  for (const auto& p : prm.pairs) {
    got[p.meta_id].push_back(combo_name(p.combo));
    const MetaProblem& m = p.meta_id == a.id ? a : p.meta_id == b.id ? b : c;
    o.require(p.input_text == format_question(m, {TextFormat::HO_Neigh, VisualFormat::Enc_Hy}),
              p.meta_id + " input text is not the HO-Neigh prompt");
  }
  std::vector<std::string> want_a{"Inc-Mat+St-Inc", "N-Set+Enc-Hy"}, got_a = got[a.id];
  std::sort(got_a.begin(), got_a.end());
  o.require(got_a == want_a, "tie case for " + a.id);
  o.require(got[b.id] == std::vector<std::string>{"HO-Neigh+Bi-Inc"}, "unique winner for " + b.id);
  o.require(got[c.id].size() == 35, "all-wrong meta should tie all 35 combos");
  o.require(prm.warnings.size() == 1, "expected one degenerate warning");
  o.detail = std::to_string(prm.pairs.size()) + " pairs: " + a.id + " tie of 2, " + b.id + " -> " +
             (got[b.id].empty() ? "none" : got[b.id].front()) + ", " + c.id + " degenerate";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "hypergvl-acceptance";
  std::error_code ec;
  fs::remove_all(work, ec);
  fs::create_directories(work);

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"constructor soundness", constructor_soundness},
      {"structural constraints", structural_constraints},
      {"serializer fidelity", serializer_fidelity},
      {"corpus arithmetic", [&] { return corpus_arithmetic(work); }},
      {"visual invariants", visual_invariants},
      {"grading self-consistency", [&] { return grading_consistency(work); }},
      {"prm construction", prm_construction},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].name << ": " << o.detail << " ["
              << fixed2(seconds_since(t0)) << " s]\n";
    for (const auto& p : o.problems) std::cout << "     " << p << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
