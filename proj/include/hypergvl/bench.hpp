#pragma once

#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <mutex>
#include <thread>

#include "hypergvl/answer.hpp"
#include "hypergvl/generate.hpp"
#include "hypergvl/solve.hpp"
#include "hypergvl/text_repr.hpp"
#include "hypergvl/visual_repr.hpp"

namespace hgvl {

struct RepCombo {
  TextFormat text = TextFormat::LO_Inc;
  VisualFormat visual = VisualFormat::Enc_Hy;
  friend auto operator<=>(const RepCombo&, const RepCombo&) = default;
};

// Text-major order: all visuals for LO-Inc first.
inline std::vector<RepCombo> all_combos() {
  std::vector<RepCombo> out;
  for (TextFormat t : kAllTextFormats)
    for (VisualFormat v : kAllVisualFormats) out.push_back({t, v});
  return out;
}

inline std::string combo_name(const RepCombo& c) {
  return std::string(text_format_name(c.text)) + "+" + std::string(visual_format_name(c.visual));
}

inline RepCombo parse_combo(const std::string& s) {
  const auto plus = s.find('+');
  if (plus != std::string::npos) {
    auto t = find_text_format(s.substr(0, plus));
    auto v = find_visual_format(s.substr(plus + 1));
    if (t && v) return {*t, *v};
  }
  throw std::invalid_argument("bad representation combination '" + s + "'");
}

struct TaskParams {
  std::optional<VertexId> u;
  std::optional<std::size_t> degree;
  std::optional<std::size_t> order;
  std::optional<VertexId> s;
  std::optional<VertexId> t;
  friend bool operator==(const TaskParams&, const TaskParams&) = default;
};

struct MetaProblem {
  std::string id;
  Task task = Task::VC;
  ScaleClass scale = ScaleClass::small;
  Source source = Source::synthetic;
  std::uint64_t seed = 0;
  Hypergraph graph;
  std::optional<Hypergraph> second;  // ISM only
  TaskParams params;
  Answer truth;  // certificate for Level-4 tasks
};

// "3cl-0007" style ids.
inline std::string meta_id(Task t, std::size_t index) {
  std::string slug = lowercase(task_name(t));
  slug.erase(std::remove(slug.begin(), slug.end(), '-'), slug.end());
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04zu", index);
  return slug + "-" + buf;
}

// Draws task parameters. DVC/OEC targets come from the values present in `h`
// unless `zero_probes` widens them to values that may match nothing.
inline TaskParams sample_params(const Hypergraph& h, Task task, std::uint64_t seed, bool zero_probes = false) {
  Rng rng(seed);
  TaskParams p;
  const auto profile = degree_profile(h);
  auto distinct = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  switch (task) {
    case Task::Ne:
      if (h.num_vertices() == 0) throw contract_error("Ne needs a vertex");
      p.u = VertexId{rng.below(h.num_vertices())};
      break;
    case Task::ONe: {
      if (h.num_edges() == 0) throw contract_error("ONe needs a hyperedge");
      p.u = VertexId{rng.below(h.num_vertices())};
      p.order = rng.pick(distinct(profile.orders));
      break;
    }
    case Task::DVC: {
      auto ds = distinct(profile.degrees);
      p.degree = zero_probes ? rng.uniform(0, ds.back() + 1) : rng.pick(ds);
      break;
    }
    case Task::OEC: {
      if (h.num_edges() == 0) throw contract_error("OEC needs a hyperedge");
      auto ks = distinct(profile.orders);
      p.order = zero_probes ? rng.uniform(2, ks.back() + 1) : rng.pick(ks);
      break;
    }
    case Task::OSP:
    case Task::OMF: {
      const auto comp = component_labels(h);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < h.num_vertices(); ++a)
        for (std::size_t b = 0; b < h.num_vertices(); ++b)
          if (a != b && comp[a] == comp[b]) pairs.emplace_back(a, b);
      if (pairs.empty()) throw contract_error(std::string(task_name(task)) + " needs two connected vertices");
      auto [a, b] = rng.pick(pairs);
      p.s = VertexId{a};
      p.t = VertexId{b};
      break;
    }
    default: break;
  }
  return p;
}

// Ground truth recomputed from the stored instance. Level-4 tasks have no
// unique answer, so the stored certificate is checked and returned.
inline Answer compute_truth(const MetaProblem& m) {
  const Hypergraph& h = m.graph;
  auto need = [&](const auto& opt, const char* what) {
    if (!opt) throw contract_error(m.id + ": missing parameter " + what);
    return *opt;
  };
  switch (m.task) {
    case Task::VC: return Count{solve_vc(h)};
    case Task::HEC: return Count{solve_hec(h)};
    case Task::Ne: return solve_ne(h, need(m.params.u, "u"));
    case Task::DVC: return Count{solve_dvc(h, need(m.params.degree, "degree"))};
    case Task::OEC: return Count{solve_oec(h, need(m.params.order, "order"))};
    case Task::ONe: return solve_one(h, need(m.params.u, "u"), need(m.params.order, "order"));
    case Task::OSP: {
      auto r = solve_osp(h, need(m.params.s, "s"), need(m.params.t, "t"));
      return r.reachable ? PathLength{r.total_weight} : PathLength{};
    }
    case Task::OMF: return Count{solve_omf(h, need(m.params.s, "s"), need(m.params.t, "t")).value};
    case Task::ISM: {
      if (!m.second) throw contract_error(m.id + ": ISM needs two hypergraphs");
      return Verdict{solve_ism(h, *m.second)};
    }
    case Task::ThreeCL:
      if (!verify_3cl(h, std::get<VertexColoring>(m.truth))) throw contract_error(m.id + ": stored coloring invalid");
      return m.truth;
    case Task::SHC:
      if (!verify_shc(h, std::get<HyperedgeSequence>(m.truth))) throw contract_error(m.id + ": stored cycle invalid");
      return m.truth;
    case Task::HHM:
      if (!verify_hhm(h, std::get<HyperedgeSequence>(m.truth), need(m.params.s, "s"), need(m.params.t, "t")))
        throw contract_error(m.id + ": stored path invalid");
      return m.truth;
  }
  throw contract_error("unreachable task");
}

struct MetaRequest {
  Task task = Task::VC;
  std::size_t index = 0;
  ScaleClass scale = ScaleClass::small;
  Source source = Source::synthetic;
  std::uint64_t master_seed = 0;
  bool zero_probes = false;
};

// Builds one meta problem. Real sources draw from `pool`; Level-4 real
// instances are resampled until a certificate exists.
inline MetaProblem generate_meta(const MetaRequest& req, const SourcePool& pool) {
  MetaProblem m;
  m.id = meta_id(req.task, req.index);
  m.task = req.task;
  m.scale = req.scale;
  m.source = req.source;
  m.seed = derive_seed(req.master_seed, static_cast<std::uint64_t>(req.task) + 1, req.index);
  const GenSpec spec{req.scale, req.source, derive_seed(m.seed, 1)};
  const bool real = req.source == Source::real;

  try {
    switch (req.task) {
      case Task::ThreeCL: {
        if (real) {
          m.graph = subsample_real(pool, spec, [](const Hypergraph& h) { return find_3cl(h).has_value(); });
          m.truth = *find_3cl(m.graph);
        } else {
          auto inst = gen_3cl_instance(spec);
          m.graph = std::move(inst.graph);
          m.truth = std::move(inst.coloring);
        }
        break;
      }
      case Task::SHC: {
        if (real) {
          m.graph = subsample_real(pool, spec, [](const Hypergraph& h) { return find_shc(h).has_value(); });
          m.truth = *find_shc(m.graph);
        } else {
          auto inst = gen_shc_instance(spec);
          m.graph = std::move(inst.graph);
          m.truth = std::move(inst.cycle);
        }
        break;
      }
      case Task::HHM: {
        if (real) {
          m.graph = subsample_real(pool, spec, [](const Hypergraph& h) {
            return find_hamiltonian_vertex_path(h, std::nullopt).has_value();
          });
          auto path = *find_hamiltonian_vertex_path(m.graph, std::nullopt);
          m.params.s = VertexId{path.front()};
          m.params.t = VertexId{path.back()};
          m.truth = steps_for_vertex_path(m.graph, path);
        } else {
          auto inst = gen_hhm_instance(spec);
          m.graph = std::move(inst.graph);
          m.params.s = inst.start;
          m.params.t = inst.end;
          m.truth = std::move(inst.path);
        }
        break;
      }
      case Task::ISM: {
        Hypergraph base = real ? subsample_real(pool, spec) : gen_random_connected(spec);
        const std::size_t cap = real ? base.num_vertices() : order_cap(base.num_vertices());
        auto pair = make_ism_pair(base, derive_seed(m.seed, 3), cap);
        m.graph = std::move(pair.first);
        m.second = std::move(pair.second);
        m.truth = Verdict{pair.isomorphic};
        break;
      }
      default: {
        m.graph = real ? subsample_real(pool, spec) : gen_random_connected(spec);
        m.params = sample_params(m.graph, req.task, derive_seed(m.seed, 2), req.zero_probes);
        m.truth = compute_truth(m);
        break;
      }
    }
  } catch (const generation_error& e) {
    throw generation_error(m.id + " (" + scale_name(req.scale) + ", " + source_name(req.source) + "): " + e.what());
  }
  return m;
}

// Question sentence with parameters substituted.
inline std::string question_text(const MetaProblem& m) {
  auto v = [](std::optional<VertexId> x) { return x ? to_string(*x) : std::string("?"); };
  auto n = [](std::optional<std::size_t> x) { return x ? std::to_string(*x) : std::string("?"); };
  switch (m.task) {
    case Task::VC: return "How many vertices are in the hypergraph G? List the answer after \"Ans:\".";
    case Task::HEC: return "How many hyperedges are in the hypergraph G? List the answer after \"Ans:\".";
    case Task::Ne:
      return "What are the direct neighbors of vertex " + v(m.params.u) +
             " in hypergraph G? (Neighbors = vertices sharing at least one hyperedge with " + v(m.params.u) +
             "). List the answer after \"Ans:\" in the format {v1,v2,...} or \"No neighbors\".";
    case Task::DVC:
      return "How many vertices have degree " + n(m.params.degree) +
             " in hypergraph G? (Degree = number of hyperedges the vertex belongs to). List the answer after "
             "\"Ans:\".";
    case Task::OEC:
      return "How many hyperedges have order " + n(m.params.order) +
             " in hypergraph G? (Order = number of vertices in the hyperedge). List the answer after \"Ans:\".";
    case Task::ONe:
      return "What are the neighbors of vertex " + v(m.params.u) +
             " when only considering hyperedges with order >= " + n(m.params.order) +
             " in hypergraph G? List the answer after \"Ans:\" in the format {v1,v2,...} or \"No n-neighbors\".";
    case Task::OSP:
      return "What is the shortest path length from vertex " + v(m.params.s) + " to vertex " + v(m.params.t) +
             " in hypergraph G, where each hyperedge's weight equals its order (number of vertices)? If no path "
             "exists, answer \"No path\". List the answer after \"Ans:\".";
    case Task::OMF:
      return "What is the estimated maximum flow from vertex " + v(m.params.s) + " to vertex " + v(m.params.t) +
             " in hypergraph G, where each hyperedge's capacity equals its order? If no flow exists, answer \"0\". "
             "List the answer after \"Ans:\".";
    case Task::ISM:
      return "Are these two hypergraphs isomorphic? (Two hypergraphs are isomorphic if there exists a vertex "
             "relabeling that transforms one into the other). List the answer after \"Ans:\" in the format "
             "[Yes/No].";
    case Task::ThreeCL:
      return "Please provide a 3-coloring strategy such that each hyperedge contains nodes with at least 2 different "
             "colors (assign each vertex a color from {c0, c1, c2}). List the answer after \"Ans:\" as "
             "\"Coloring:[v0:c0,v1:c1,...]\".";
    case Task::SHC:
      return "Please identify a strict hypercycle in the hypergraph G (A strict hypercycle is a sequence of "
             "hyperedges e_1,e_2,...,e_k where adjacent hyperedges share exactly one vertex, i.e., "
             "|e_i ∩ e_{i+1}| = 1, and |e_k ∩ e_1| = 1, forming a closed loop). List the hypercycle after \"Ans:\" "
             "as \"Cycle:[e0,e1,...]\".";
    case Task::HHM:
      return "Please provide a valid Hamiltonian path from " + v(m.params.s) + " to " + v(m.params.t) +
             ".\n(Hamiltonian path = path visiting all vertices exactly once). List the answer after \"Ans:\" as "
             "\"Path:[e0,e1,...]\".";
  }
  return {};
}

// Textual rendering(s) followed by the question.
inline std::string format_question(const MetaProblem& m, const RepCombo& combo) {
  if (m.task == Task::ISM) {
    if (!m.second) throw contract_error(m.id + ": ISM needs two hypergraphs");
    return "There are two hypergraphs: H and G.\nThe description of H is: \n" + render_text(m.graph, combo.text, "H") +
           "\nThe description of G is: \n" + render_text(*m.second, combo.text, "G") + "\nQ: " + question_text(m);
  }
  return render_text(m.graph, combo.text, "G") + "\nQ: " + question_text(m);
}

// Everything a grader needs: the truth, plus the instance for Level-4 tasks
// where any verifier-valid certificate counts.
inline json answer_spec(const MetaProblem& m) {
  json spec{{"kind", answer_kind_name(answer_kind(m.task))},
            {"value", answer_to_json(m.truth)},
            {"canonical", render_canonical_answer(m.task, m.truth)}};
  if (task_level(m.task) == 4) spec["graph"] = to_json(m.graph);
  if (m.task == Task::HHM) {
    spec["start"] = to_string(*m.params.s);
    spec["end"] = to_string(*m.params.t);
  }
  return spec;
}

struct QASample {
  std::string sample_id;
  std::string meta_id;
  Task task = Task::VC;
  ScaleClass scale = ScaleClass::small;
  Source source = Source::synthetic;
  RepCombo combo;
  std::string prompt;
  std::string image_path;
  json answer_spec;
};

inline std::string image_path_for(const std::string& meta, VisualFormat v) {
  return "images/" + meta + "__" + std::string(visual_format_name(v)) + ".svg";
}

inline std::vector<QASample> expand_samples(const MetaProblem& m) {
  std::vector<QASample> out;
  const json spec = answer_spec(m);
  for (const RepCombo& c : all_combos()) {
    QASample s;
    s.sample_id = m.id + "__" + std::string(text_format_name(c.text)) + "__" + std::string(visual_format_name(c.visual));
    s.meta_id = m.id;
    s.task = m.task;
    s.scale = m.scale;
    s.source = m.source;
    s.combo = c;
    s.prompt = format_question(m, c);
    s.image_path = image_path_for(m.id, c.visual);
    s.answer_spec = spec;
    out.push_back(std::move(s));
  }
  return out;
}

inline json to_json(const QASample& s) {
  return json{{"sample_id", s.sample_id},
              {"meta_id", s.meta_id},
              {"task", task_name(s.task)},
              {"level", task_level(s.task)},
              {"scale", scale_name(s.scale)},
              {"source", source_name(s.source)},
              {"text_format", text_format_name(s.combo.text)},
              {"visual_format", visual_format_name(s.combo.visual)},
              {"prompt", s.prompt},
              {"image_path", s.image_path},
              {"answer_spec", s.answer_spec}};
}

inline QASample sample_from_json(const json& j) {
  QASample s;
  s.sample_id = j.at("sample_id").get<std::string>();
  s.meta_id = j.at("meta_id").get<std::string>();
  s.task = parse_task(j.at("task").get<std::string>());
  s.scale = parse_scale(j.at("scale").get<std::string>());
  s.source = parse_source(j.at("source").get<std::string>());
  auto t = find_text_format(j.at("text_format").get<std::string>());
  auto v = find_visual_format(j.at("visual_format").get<std::string>());
  if (!t || !v) throw std::invalid_argument("sample " + s.sample_id + ": unknown representation");
  s.combo = {*t, *v};
  s.prompt = j.at("prompt").get<std::string>();
  s.image_path = j.at("image_path").get<std::string>();
  s.answer_spec = j.at("answer_spec");
  return s;
}

inline json params_to_json(const TaskParams& p) {
  json j = json::object();
  if (p.u) j["u"] = to_string(*p.u);
  if (p.degree) j["degree"] = *p.degree;
  if (p.order) j["order"] = *p.order;
  if (p.s) j["s"] = to_string(*p.s);
  if (p.t) j["t"] = to_string(*p.t);
  return j;
}

inline TaskParams params_from_json(const json& j) {
  TaskParams p;
  if (j.contains("u")) p.u = VertexId{id_from_string(j["u"].get<std::string>(), 'v')};
  if (j.contains("degree")) p.degree = j["degree"].get<std::size_t>();
  if (j.contains("order")) p.order = j["order"].get<std::size_t>();
  if (j.contains("s")) p.s = VertexId{id_from_string(j["s"].get<std::string>(), 'v')};
  if (j.contains("t")) p.t = VertexId{id_from_string(j["t"].get<std::string>(), 'v')};
  return p;
}

inline json to_json(const MetaProblem& m) {
  json j{{"id", m.id},
         {"task", task_name(m.task)},
         {"level", task_level(m.task)},
         {"scale", scale_name(m.scale)},
         {"source", source_name(m.source)},
         {"seed", m.seed},
         {"graph", to_json(m.graph)},
         {"params", params_to_json(m.params)},
         {"truth", answer_to_json(m.truth)}};
  if (m.second) j["second"] = to_json(*m.second);
  return j;
}

inline MetaProblem meta_from_json(const json& j) {
  MetaProblem m;
  m.id = j.at("id").get<std::string>();
  m.task = parse_task(j.at("task").get<std::string>());
  m.scale = parse_scale(j.at("scale").get<std::string>());
  m.source = parse_source(j.at("source").get<std::string>());
  m.seed = j.at("seed").get<std::uint64_t>();
  m.graph = hypergraph_from_json(j.at("graph"));
  if (j.contains("second")) m.second = hypergraph_from_json(j.at("second"));
  m.params = params_from_json(j.at("params"));
  m.truth = answer_from_json(m.task, j.at("truth"));
  return m;
}

// Labels 0..weights.size()-1 in exact proportion (largest remainder), shuffled.
inline std::vector<std::size_t> stratified_labels(std::size_t count, const std::vector<std::size_t>& weights, Rng& rng) {
  std::size_t total = 0;
  for (std::size_t w : weights) total += w;
  if (total == 0) throw std::invalid_argument("mix weights must not all be zero");
  std::vector<std::size_t> quota(weights.size());
  std::vector<std::pair<std::size_t, std::size_t>> remainders;  // (remainder, -index) ordering below
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    quota[i] = count * weights[i] / total;
    assigned += quota[i];
    remainders.emplace_back(count * weights[i] % total, i);
  }
  std::stable_sort(remainders.begin(), remainders.end(), [](auto& a, auto& b) { return a.first > b.first; });
  for (std::size_t i = 0; assigned < count; ++i, ++assigned) ++quota[remainders[i].second];
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < quota.size(); ++i) labels.insert(labels.end(), quota[i], i);
  rng.shuffle(labels);
  return labels;
}

// "1:2:1" -> {1,2,1}
inline std::vector<std::size_t> parse_mix(const std::string& s, std::size_t parts) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad mix '" + s + "'");
    out.push_back(std::stoul(tok));
  }
  if (out.size() != parts) throw std::invalid_argument("mix '" + s + "' needs " + std::to_string(parts) + " parts");
  return out;
}

// Runs fn(i) for i in [0, count) on `jobs` threads. The exception from the
// lowest failing index is rethrown, so failures do not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct CorpusPlan {
  std::vector<std::pair<Task, std::size_t>> per_task;  // meta count per task
  std::uint64_t master_seed = 0;
  std::vector<std::size_t> scale_mix{1, 2, 1};
  std::vector<std::size_t> source_mix{1, 1};
  bool zero_probes = false;

  static CorpusPlan uniform(std::size_t count, std::uint64_t seed) {
    CorpusPlan p;
    for (Task t : kAllTasks) p.per_task.emplace_back(t, count);
    p.master_seed = seed;
    return p;
  }
};

// Meta requests with scale and source quotas drawn per task.
inline std::vector<MetaRequest> plan_requests(const CorpusPlan& plan) {
  std::vector<MetaRequest> out;
  for (auto [task, count] : plan.per_task) {
    if (count == 0) throw std::invalid_argument("meta count for " + std::string(task_name(task)) + " must be >= 1");
    Rng rng(derive_seed(plan.master_seed, 100 + static_cast<std::uint64_t>(task)));
    auto scales = stratified_labels(count, plan.scale_mix, rng);
    auto sources = stratified_labels(count, plan.source_mix, rng);
    for (std::size_t i = 0; i < count; ++i)
      out.push_back({task, i, static_cast<ScaleClass>(scales[i]), static_cast<Source>(sources[i]), plan.master_seed,
                     plan.zero_probes});
  }
  return out;
}

inline std::vector<MetaProblem> generate_metas(const CorpusPlan& plan, const SourcePool& pool, std::size_t jobs = 1) {
  auto reqs = plan_requests(plan);
  std::vector<MetaProblem> metas(reqs.size());
  parallel_for(reqs.size(), jobs, [&](std::size_t i) { metas[i] = generate_meta(reqs[i], pool); });
  return metas;
}

inline void render_images(const MetaProblem& m, const std::filesystem::path& outdir) {
  RenderConfig cfg;
  cfg.seed = derive_seed(m.seed, 4);
  for (VisualFormat v : kAllVisualFormats) {
    const std::string svg = m.second ? render_svg_pair(m.graph, *m.second, v, cfg) : render_svg(m.graph, v, cfg);
    write_file((outdir / image_path_for(m.id, v)).string(), svg);
  }
}

struct EmitSummary {
  std::size_t metas = 0;
  std::size_t samples = 0;
  std::filesystem::path manifest;
};

// Writes manifest.jsonl (one QA sample per line, keys sorted), metas.jsonl,
// and, when `images` is set, one SVG per (meta, visual format).
inline EmitSummary emit_corpus(const CorpusPlan& plan, const std::filesystem::path& outdir, const SourcePool& pool,
                               std::size_t jobs = 1, bool images = true) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(outdir / "images", ec);
  if (ec) throw std::runtime_error("cannot create " + (outdir / "images").string() + ": " + ec.message());

  auto metas = generate_metas(plan, pool, jobs);
  std::vector<std::string> blocks(metas.size());
  parallel_for(metas.size(), jobs, [&](std::size_t i) {
    std::string block;
    for (const QASample& s : expand_samples(metas[i])) block += to_json(s).dump() + "\n";
    blocks[i] = std::move(block);
    if (images) render_images(metas[i], outdir);
  });

  EmitSummary sum;
  sum.manifest = outdir / "manifest.jsonl";
  std::ofstream manifest(sum.manifest, std::ios::binary);
  std::ofstream meta_out(outdir / "metas.jsonl", std::ios::binary);
  if (!manifest) throw std::runtime_error("cannot write " + sum.manifest.string());
  if (!meta_out) throw std::runtime_error("cannot write " + (outdir / "metas.jsonl").string());
  for (std::size_t i = 0; i < metas.size(); ++i) {
    manifest << blocks[i];
    meta_out << to_json(metas[i]).dump() << "\n";
  }
  manifest.flush();
  meta_out.flush();
  if (!manifest || !meta_out) throw std::runtime_error("write failed under " + outdir.string());
  sum.metas = metas.size();
  sum.samples = metas.size() * 35;
  return sum;
}

}  // namespace hgvl
