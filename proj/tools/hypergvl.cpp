#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "hypergvl/hypergvl.hpp"
#include "hypergvl/selfcheck.hpp"

#ifndef HYPERGVL_FIXTURE_DIR
#define HYPERGVL_FIXTURE_DIR "fixtures/text"
#endif

namespace fs = std::filesystem;
using namespace hgvl;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string default_out() {
  const char* env = std::getenv("HYPERBENCH_OUT");
  return env && *env ? env : "hypergvl-out";
}

SourcePool load_pool(const std::string& path) {
  if (path.empty()) return builtin_pool();
  return SourcePool(load_hypergraph(path), path);
}

std::optional<VertexId> vertex_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return VertexId{id_from_string(s, 'v')};
}

// Grades every response line against the manifest.
std::vector<GradeRecord> grade_all(const Manifest& manifest, const std::string& responses, const ParseOptions& opt,
                                   std::vector<Task>* tasks = nullptr) {
  std::vector<GradeRecord> records;
  std::vector<std::string> unknown;
  for (const json& j : read_jsonl(responses)) {
    const std::string id = j.at("sample_id").get<std::string>();
    auto it = manifest.find(id);
    if (it == manifest.end()) {
      unknown.push_back(id);
      continue;
    }
    records.push_back(grade_sample(it->second, j.at("raw_text").get<std::string>(), opt));
    if (tasks) tasks->push_back(it->second.task);
  }
  if (!unknown.empty()) {
    std::string msg = "responses reference unknown samples:";
    for (const auto& id : unknown) msg += " " + id;
    throw std::invalid_argument(msg);
  }
  return records;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HyperGVL benchmark toolkit: generation, rendering, ground truth, grading"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out = default_out(), pool_path, task_name_arg, graph_path, format_name;
  std::string scale_arg = "small", source_arg = "synthetic";
  std::size_t count = 1, per_task = 200, jobs = 1;
  bool strict = false, lenient = false;

  // generate
  auto* gen = app.add_subcommand("generate", "Generate hypergraphs (meta problems when --task is given)");
  gen->add_option("--seed", seed, "Master seed")->required();
  gen->add_option("--count", count, "Number of instances")->check(CLI::PositiveNumber);
  gen->add_option("--task", task_name_arg, "Task, e.g. OSP or 3-CL");
  gen->add_option("--scale", scale_arg, "small | medium | large");
  gen->add_option("--source", source_arg, "synthetic | real");
  gen->add_option("--pool", pool_path, "Real source hypergraph (JSON or hMETIS)");
  gen->add_option("--out", out, "Output directory (default $HYPERBENCH_OUT)");

  // render
  std::string render_out;
  auto* ren = app.add_subcommand("render", "Render a hypergraph in a textual or visual format");
  ren->add_option("--graph", graph_path, "Hypergraph file (JSON or hMETIS)")->required()->check(CLI::ExistingFile);
  ren->add_option("--format", format_name, "LO-Inc, N-Pair, ..., Enc-Hy, Cli-Exp, ...")->required();
  ren->add_option("--seed", seed, "Layout seed");
  ren->add_option("--out", render_out, "Output file (default stdout)");

  // solve
  std::string u_arg, s_arg, t_arg, second_path;
  std::optional<std::size_t> degree_arg, order_arg;
  auto* sol = app.add_subcommand("solve", "Compute the ground truth for a task instance");
  sol->add_option("--task", task_name_arg, "Task")->required();
  sol->add_option("--graph", graph_path, "Hypergraph file")->required()->check(CLI::ExistingFile);
  sol->add_option("--second", second_path, "Second hypergraph (ISM)")->check(CLI::ExistingFile);
  sol->add_option("--u", u_arg, "Target vertex, e.g. v3");
  sol->add_option("--degree", degree_arg, "Degree (DVC)");
  sol->add_option("--order", order_arg, "Order (OEC, ONe)");
  sol->add_option("--s", s_arg, "Source / start vertex");
  sol->add_option("--t", t_arg, "Sink / end vertex");

  // verify
  std::string cert;
  auto* ver = app.add_subcommand("verify", "Check a Level-4 certificate");
  ver->add_option("--task", task_name_arg, "3cl | shc | hhm")->required();
  ver->add_option("--graph", graph_path, "Hypergraph file")->required()->check(CLI::ExistingFile);
  ver->add_option("--cert", cert, "Certificate, e.g. \"Coloring:[v0:c0,...]\"")->required();
  ver->add_option("--s", s_arg, "Start vertex (HHM)");
  ver->add_option("--t", t_arg, "End vertex (HHM)");

  // emit
  std::string scale_mix = "1:2:1", source_mix = "1:1";
  bool no_images = false, zero_probes = false;
  auto* emi = app.add_subcommand("emit", "Emit the QA corpus (manifest.jsonl, metas.jsonl, images/)");
  emi->add_option("--seed", seed, "Master seed")->required();
  emi->add_option("--per-task", per_task, "Meta problems per task")->check(CLI::PositiveNumber);
  emi->add_option("--scale-mix", scale_mix, "small:medium:large weights");
  emi->add_option("--source-mix", source_mix, "synthetic:real weights");
  emi->add_option("--pool", pool_path, "Real source hypergraph (JSON or hMETIS)");
  emi->add_option("--out", out, "Output directory (default $HYPERBENCH_OUT)");
  emi->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  emi->add_flag("--no-images", no_images, "Skip SVG rendering");
  emi->add_flag("--zero-probes", zero_probes, "Let DVC/OEC ask about absent values");

  // grade
  std::string manifest_path, responses_path, prm_out;
  bool first_marker = false;
  auto* gra = app.add_subcommand("grade", "Grade model responses; writes grades.jsonl and accuracy.csv");
  gra->add_option("--manifest", manifest_path, "manifest.jsonl")->required()->check(CLI::ExistingFile);
  gra->add_option("--responses", responses_path, "responses JSONL {sample_id, raw_text}")
      ->required()
      ->check(CLI::ExistingFile);
  gra->add_option("--out", out, "Output directory (default $HYPERBENCH_OUT)");
  auto* gl = gra->add_flag("--lenient", lenient, "Accept format deviations (default)");
  gra->add_flag("--strict", strict, "Require the exact answer format")->excludes(gl);
  gra->add_flag("--first-marker", first_marker, "Use the first \"Ans:\" instead of the last");

  // prm
  auto* prm = app.add_subcommand("prm", "Build the representation-routing dataset from graded responses");
  prm->add_option("--manifest", manifest_path, "manifest.jsonl")->required()->check(CLI::ExistingFile);
  prm->add_option("--responses", responses_path, "responses JSONL")->required()->check(CLI::ExistingFile);
  prm->add_option("--out", prm_out, "Output JSONL (default <$HYPERBENCH_OUT>/prm.jsonl)");
  auto* pl = prm->add_flag("--lenient", lenient, "Accept format deviations (default)");
  prm->add_flag("--strict", strict, "Require the exact answer format")->excludes(pl);

  // selfcheck
  std::size_t oracle_cases = 500;
  std::string fixtures = HYPERGVL_FIXTURE_DIR;
  auto* chk = app.add_subcommand("selfcheck", "Run the oracle-equivalence and golden-file suites");
  chk->add_option("--cases", oracle_cases, "Oracle instances");
  chk->add_option("--seed", seed, "Seed for the oracle instances");
  chk->add_option("--fixtures", fixtures, "Golden text directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      const GenSpec base{parse_scale(scale_arg), parse_source(source_arg), 0};
      const SourcePool pool = load_pool(pool_path);
      fs::create_directories(out);
      for (std::size_t i = 0; i < count; ++i) {
        if (!task_name_arg.empty()) {
          auto m = generate_meta({parse_task(task_name_arg), i, base.scale, base.source, seed, false}, pool);
          write_file((fs::path(out) / (m.id + ".json")).string(), to_json(m).dump(2) + "\n");
        } else {
          GenSpec spec = base;
          spec.seed = derive_seed(seed, 0, i);
          Hypergraph h = base.source == Source::real ? subsample_real(pool, spec) : gen_random_connected(spec);
          char name[32];
          std::snprintf(name, sizeof name, "graph-%04zu.json", i);
          write_file((fs::path(out) / name).string(), to_json(h).dump() + "\n");
        }
      }
      std::cout << "wrote " << count << " file(s) to " << out << "\n";
      return kOk;
    }

    if (*ren) {
      const Hypergraph h = load_hypergraph(graph_path);
      std::string body;
      if (auto tf = find_text_format(format_name)) {
        body = render_text(h, *tf) + "\n";
      } else if (auto vf = find_visual_format(format_name)) {
        RenderConfig cfg;
        cfg.seed = seed;
        body = render_svg(h, *vf, cfg);
      } else {
        throw std::invalid_argument("unknown format '" + format_name + "'");
      }
      if (render_out.empty())
        std::cout << body;
      else
        write_file(render_out, body);
      return kOk;
    }

    if (*sol) {
      MetaProblem m;
      m.id = "cli";
      m.task = parse_task(task_name_arg);
      m.graph = load_hypergraph(graph_path);
      if (!second_path.empty()) m.second = load_hypergraph(second_path);
      m.params = {vertex_opt(u_arg), degree_arg, order_arg, vertex_opt(s_arg), vertex_opt(t_arg)};
      Answer a;
      switch (m.task) {
        case Task::ThreeCL: {
          auto c = find_3cl(m.graph);
          if (!c) return std::cout << "No 3-coloring\n", kFailed;
          a = *c;
          break;
        }
        case Task::SHC: {
          auto c = find_shc(m.graph);
          if (!c) return std::cout << "No strict hypercycle of length >= 3\n", kFailed;
          a = *c;
          break;
        }
        case Task::HHM: {
          if (!m.params.s || !m.params.t) throw std::invalid_argument("HHM needs --s and --t");
          auto p = find_hhm(m.graph, *m.params.s, *m.params.t);
          if (!p) return std::cout << "No Hamiltonian path\n", kFailed;
          a = *p;
          break;
        }
        default:
          try {
            a = compute_truth(m);
          } catch (const contract_error& e) {
            throw std::invalid_argument(e.what());
          }
      }
      std::cout << render_canonical_answer(m.task, a) << "\n";
      return kOk;
    }

    if (*ver) {
      const Task task = parse_task(task_name_arg);
      if (task_level(task) != 4) throw std::invalid_argument("verify takes 3cl, shc or hhm");
      Expected exp;
      exp.task = task;
      exp.graph = load_hypergraph(graph_path);
      exp.s = vertex_opt(s_arg);
      exp.t = vertex_opt(t_arg);
      if (task == Task::HHM && (!exp.s || !exp.t)) throw std::invalid_argument("HHM needs --s and --t");
      auto parsed = parse_answer(task, "Ans: " + cert, ParseOptions{false, true});
      bool valid = false;
      if (!parsed.failed()) valid = judge(exp, *parsed.answer).correct;
      std::cout << (valid ? "VALID" : "INVALID") << "\n";
      return valid ? kOk : kFailed;
    }

    if (*emi) {
      CorpusPlan plan = CorpusPlan::uniform(per_task, seed);
      plan.scale_mix = parse_mix(scale_mix, 3);
      plan.source_mix = parse_mix(source_mix, 2);
      plan.zero_probes = zero_probes;
      const SourcePool pool = load_pool(pool_path);
      auto sum = emit_corpus(plan, out, pool, jobs, !no_images);
      std::cout << "metas " << sum.metas << "\nsamples " << sum.samples << "\nmanifest " << sum.manifest.string()
                << "\n";
      return kOk;
    }

    if (*gra) {
      const Manifest manifest = load_manifest(manifest_path);
      std::vector<Task> tasks;
      auto records = grade_all(manifest, responses_path, ParseOptions{!strict, !first_marker}, &tasks);
      fs::create_directories(out);
      std::string lines;
      for (std::size_t i = 0; i < records.size(); ++i) lines += to_json(records[i], tasks[i]).dump() + "\n";
      write_file((fs::path(out) / "grades.jsonl").string(), lines);
      write_file((fs::path(out) / "accuracy.csv").string(), to_csv(aggregate(records, manifest)));
      std::size_t correct = 0;
      for (const auto& r : records) correct += r.correct;
      std::cout << "graded " << records.size() << ", correct " << correct << "\n";
      return kOk;
    }

    if (*prm) {
      const Manifest manifest = load_manifest(manifest_path);
      auto records = grade_all(manifest, responses_path, ParseOptions{!strict, true});
      auto result = build_prm(records, manifest);
      for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
      if (prm_out.empty()) {
        fs::create_directories(out);
        prm_out = (fs::path(out) / "prm.jsonl").string();
      }
      std::string lines;
      for (const auto& p : result.pairs) lines += to_json(p).dump() + "\n";
      write_file(prm_out, lines);
      std::cout << "pairs " << result.pairs.size() << "\n";
      return kOk;
    }

    if (*chk) {
      auto oracles = check_oracles(oracle_cases, seed);
      auto golden = check_golden(fixtures);
      std::cout << (oracles.ok() ? "PASS" : "FAIL") << " oracle equivalence (" << oracles.cases << " instances)\n";
      for (const auto& f : oracles.failures) std::cout << "  " << f << "\n";
      std::cout << (golden.ok() ? "PASS" : "FAIL") << " golden text files (" << golden.cases << " formats)\n";
      for (const auto& f : golden.failures) std::cout << "  " << f << "\n";
      return oracles.ok() && golden.ok() ? kOk : kFailed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
