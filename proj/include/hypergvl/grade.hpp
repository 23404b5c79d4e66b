#pragma once

#include <map>
#include <regex>
#include <set>

#include "hypergvl/bench.hpp"

namespace hgvl {

struct ParseOptions {
  bool lenient = true;
  bool last_marker = true;  // several "Ans:" markers: take the last (or the first)
};

struct ParsedAnswer {
  std::optional<Answer> answer;  // empty on parse failure
  std::vector<std::string> flags;
  bool failed() const { return !answer.has_value(); }
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Trailing full stop dropped; the templates end their own sentences with one.
inline std::string strip_period(std::string s) {
  s = trim(s);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return trim(s);
}

inline const std::regex& re(const char* pattern) {
  // One compiled regex per pattern literal; safe for concurrent use once built.
  static std::mutex mu;
  static std::map<const char*, std::regex> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(pattern);
  if (it == cache.end()) it = cache.emplace(pattern, std::regex(pattern, std::regex::icase)).first;
  return it->second;
}

inline std::vector<std::size_t> tokens(const std::string& s, const char* pattern) {
  std::vector<std::size_t> out;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), re(pattern)); it != std::sregex_iterator(); ++it)
    out.push_back(std::stoul((*it)[1].str()));
  return out;
}

inline std::optional<Answer> parse_count(const std::string& payload, bool lenient, std::vector<std::string>& flags) {
  const std::string p = strip_period(payload);
  std::smatch m;
  if (std::regex_match(p, m, re(R"((\d+))"))) return Count{std::stoul(m[1].str())};
  if (!lenient) return std::nullopt;
  if (!std::regex_search(p, m, re(R"(\b(\d+)\b)"))) return std::nullopt;
  flags.push_back("surrounding_text");
  return Count{std::stoul(m[1].str())};
}

inline std::optional<Answer> parse_path_length(const std::string& payload, bool lenient,
                                               std::vector<std::string>& flags) {
  const std::string p = strip_period(payload);
  if (p == "No path") return PathLength{};
  std::smatch m;
  if (std::regex_match(p, m, re(R"((\d+))"))) return PathLength{std::stoul(m[1].str())};
  if (!lenient) return std::nullopt;
  if (std::regex_search(p, re(R"(\bno\s+path\b)"))) {
    flags.push_back("format_variant");
    return PathLength{};
  }
  if (!std::regex_search(p, m, re(R"(\b(\d+)\b)"))) return std::nullopt;
  flags.push_back("surrounding_text");
  return PathLength{std::stoul(m[1].str())};
}

inline std::optional<Answer> parse_vertex_set(Task task, const std::string& payload, bool lenient,
                                              std::vector<std::string>& flags) {
  const std::string p = strip_period(payload);
  const std::string none = task == Task::ONe ? "No n-neighbors" : "No neighbors";
  auto finish = [&](std::vector<std::size_t> ids) -> Answer {
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) flags.push_back("duplicate_vertex");
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    VertexSet out;
    for (std::size_t v : ids) out.push_back(VertexId{v});
    return out;
  };
  static const std::regex exact(R"(\{\s*v\d+(\s*,\s*v\d+)*\s*\})");
  if (p == none) return VertexSet{};
  if (std::regex_match(p, exact)) return finish(tokens(p, R"(v(\d+))"));
  if (!lenient) return std::nullopt;
  if (std::regex_search(p, re(R"(\bno\s+(n-)?neighbou?rs\b|^none$)"))) {
    flags.push_back("format_variant");
    return VertexSet{};
  }
  std::smatch m;
  if (std::regex_search(p, m, re(R"(\{([^}]*)\})"))) {
    const std::string inner = m[1].str();
    auto ids = tokens(inner, R"(\bv(\d+)\b)");
    flags.push_back(ids.empty() ? "empty_braces" : "format_variant");
    return finish(std::move(ids));
  }
  const std::string first_line = p.substr(0, p.find('\n'));
  auto ids = tokens(first_line, R"(\bv(\d+)\b)");
  if (ids.empty()) return std::nullopt;
  flags.push_back("no_braces");
  return finish(std::move(ids));
}

inline std::optional<Answer> parse_verdict(const std::string& payload, bool lenient, std::vector<std::string>& flags) {
  const std::string p = strip_period(payload);
  if (p == "Yes" || p == "[Yes]") return Verdict{true};
  if (p == "No" || p == "[No]") return Verdict{false};
  if (!lenient) return std::nullopt;
  std::smatch m;
  if (!std::regex_search(p, m, re(R"(\b(yes|no)\b)"))) return std::nullopt;
  flags.push_back("format_variant");
  return Verdict{lowercase(m[1].str()) == "yes"};
}

inline std::optional<Answer> parse_coloring(const std::string& payload, bool lenient, std::vector<std::string>& flags) {
  const std::string p = strip_period(payload);
  static const std::regex exact(R"(Coloring:\[v\d+:c\d+(,v\d+:c\d+)*\])");
  std::string body;
  std::smatch m;
  if (std::regex_match(p, exact)) {
    body = p;
  } else {
    if (!lenient) return std::nullopt;
    if (std::regex_search(p, m, re(R"(coloring\s*:\s*\[([^\]]*)\])"))) {
      body = m[1].str();
    } else if (std::regex_search(p, m, re(R"(\[([^\]]*v\d+\s*[:=]\s*c?\d+[^\]]*)\])"))) {
      body = m[1].str();
    } else {
      return std::nullopt;
    }
    flags.push_back("format_variant");
  }
  VertexColoring c;
  const char* entry = lenient ? R"(\bv(\d+)\s*[:=]\s*c?(\d+))" : R"(v(\d+):c(\d+))";
  bool any = false;
  for (auto it = std::sregex_iterator(body.begin(), body.end(), re(entry)); it != std::sregex_iterator(); ++it) {
    const std::size_t v = std::stoul((*it)[1].str());
    const int col = static_cast<int>(std::min<unsigned long>(std::stoul((*it)[2].str()), 1000));
    if (v >= 100000) return std::nullopt;
    if (c.color.size() <= v) c.color.resize(v + 1, -1);
    if (c.color[v] != -1) {
      flags.push_back("duplicate_vertex");
      return std::nullopt;
    }
    c.color[v] = col;
    any = true;
  }
  if (!any) return std::nullopt;
  return c;
}

inline std::optional<Answer> parse_sequence(const char* tag, const std::string& payload, bool lenient,
                                            std::vector<std::string>& flags) {
  const std::string p = strip_period(payload);
  static const std::regex exact_cycle(R"(Cycle:\[(e\d+(,e\d+)*)?\])");
  static const std::regex exact_path(R"(Path:\[(e\d+(,e\d+)*)?\])");
  const std::regex& exact = std::string_view(tag) == "Cycle" ? exact_cycle : exact_path;
  std::string body;
  std::smatch m;
  if (std::regex_match(p, exact)) {
    body = p.substr(std::string(tag).size());
  } else {
    if (!lenient) return std::nullopt;
    if (std::regex_search(p, m, re(R"((cycle|path)\s*:\s*\[([^\]]*)\])"))) {
      if (lowercase(m[1].str()) != lowercase(tag)) flags.push_back("wrong_tag");
      body = m[2].str();
    } else if (std::regex_search(p, m, re(R"(\[([^\]]*)\])"))) {
      body = m[1].str();
    } else {
      body = p.substr(0, p.find('\n'));
    }
    flags.push_back("format_variant");
  }
  HyperedgeSequence seq;
  for (std::size_t j : tokens(body, R"(\be(\d+)\b)")) seq.push_back(HyperedgeId{j});
  if (seq.empty() && std::any_of(body.begin(), body.end(), [](unsigned char ch) { return std::isalnum(ch); }))
    return std::nullopt;
  return seq;
}

}  // namespace detail

// Reads the payload after the "Ans:" marker (case-insensitive). Lenient mode
// accepts surrounding prose, case and brace variants, and a missing marker;
// every such allowance is recorded in `flags`.
inline ParsedAnswer parse_answer(Task task, std::string_view raw, const ParseOptions& opt = {}) {
  ParsedAnswer out;
  const std::string lower = lowercase(raw);
  std::vector<std::size_t> marks;
  for (auto pos = lower.find("ans:"); pos != std::string::npos; pos = lower.find("ans:", pos + 1)) marks.push_back(pos);
  std::string payload;
  if (marks.empty()) {
    if (!opt.lenient) {
      out.flags.push_back("no_marker");
      return out;
    }
    out.flags.push_back("no_marker");
    payload = std::string(raw);
  } else {
    if (marks.size() > 1) out.flags.push_back("multiple_markers");
    const std::size_t at = opt.last_marker ? marks.back() : marks.front();
    if (raw.substr(at, 4) != "Ans:") out.flags.push_back("marker_case");
    payload = std::string(raw.substr(at + 4));
    if (!opt.last_marker && marks.size() > 1) payload = std::string(raw.substr(at + 4, marks[1] - at - 4));
  }

  const bool len = opt.lenient;
  try {
    switch (answer_kind(task)) {
      case AnswerKind::count: out.answer = detail::parse_count(payload, len, out.flags); break;
      case AnswerKind::path_length: out.answer = detail::parse_path_length(payload, len, out.flags); break;
      case AnswerKind::vertex_set: out.answer = detail::parse_vertex_set(task, payload, len, out.flags); break;
      case AnswerKind::verdict: out.answer = detail::parse_verdict(payload, len, out.flags); break;
      case AnswerKind::coloring: out.answer = detail::parse_coloring(payload, len, out.flags); break;
      case AnswerKind::cycle: out.answer = detail::parse_sequence("Cycle", payload, len, out.flags); break;
      case AnswerKind::path: out.answer = detail::parse_sequence("Path", payload, len, out.flags); break;
    }
  } catch (const std::out_of_range&) {
    out.answer.reset();  // numbers too large for any id or count
  }
  if (!out.answer) out.flags.push_back("parse_failure");
  return out;
}

// What a response is judged against. Level-4 tasks carry the instance since
// any verifier-valid certificate is accepted.
struct Expected {
  Task task = Task::VC;
  Answer truth;
  std::optional<Hypergraph> graph;
  std::optional<VertexId> s;
  std::optional<VertexId> t;
};

inline Expected expected_for(const MetaProblem& m) {
  Expected e{m.task, m.truth, std::nullopt, m.params.s, m.params.t};
  if (task_level(m.task) == 4) e.graph = m.graph;
  return e;
}

inline Expected expected_from_spec(Task task, const json& spec) {
  Expected e;
  e.task = task;
  e.truth = answer_from_json(task, spec.at("value"));
  if (spec.contains("graph")) e.graph = hypergraph_from_json(spec.at("graph"));
  if (spec.contains("start")) e.s = VertexId{id_from_string(spec.at("start").get<std::string>(), 'v')};
  if (spec.contains("end")) e.t = VertexId{id_from_string(spec.at("end").get<std::string>(), 'v')};
  return e;
}

struct Judgement {
  bool correct = false;
  std::vector<std::string> flags;
};

inline Judgement judge(const Expected& exp, const Answer& given) {
  Judgement j;
  if (!answer_fits(exp.task, given)) {
    j.flags.push_back("type_mismatch");
    return j;
  }
  switch (answer_kind(exp.task)) {
    case AnswerKind::vertex_set: {
      auto a = std::get<VertexSet>(given), b = std::get<VertexSet>(exp.truth);
      for (auto* s : {&a, &b}) {
        std::sort(s->begin(), s->end());
        s->erase(std::unique(s->begin(), s->end()), s->end());
      }
      j.correct = a == b;
      return j;
    }
    case AnswerKind::coloring: {
      if (!exp.graph) throw contract_error("3-CL judgement needs the hypergraph");
      const auto& c = std::get<VertexColoring>(given);
      if (c.color.size() != exp.graph->num_vertices() || !c.total()) {
        j.flags.push_back("incomplete_certificate");
        return j;
      }
      j.correct = verify_3cl(*exp.graph, c);
      return j;
    }
    case AnswerKind::cycle:
    case AnswerKind::path: {
      if (!exp.graph) throw contract_error("certificate judgement needs the hypergraph");
      const auto& seq = std::get<HyperedgeSequence>(given);
      for (HyperedgeId e : seq)
        if (e.index >= exp.graph->num_edges()) {
          j.flags.push_back("unknown_hyperedge");
          return j;
        }
      if (exp.task == Task::SHC) {
        j.correct = verify_shc(*exp.graph, seq);
        if (j.correct && seq.size() == 2) j.flags.push_back("degenerate_cycle");
      } else {
        if (!exp.s || !exp.t) throw contract_error("HHM judgement needs endpoints");
        j.correct = verify_hhm(*exp.graph, seq, *exp.s, *exp.t);
      }
      return j;
    }
    default: j.correct = given == exp.truth; return j;
  }
}

inline Judgement judge(const MetaProblem& m, const Answer& given) { return judge(expected_for(m), given); }

// A wrong answer one small edit away from the truth: counts off by one, one
// vertex swapped, a flipped verdict, or a single certificate change that the
// verifier rejects.
inline Answer corrupt_answer(const MetaProblem& m, std::uint64_t seed) {
  Rng rng(seed);
  const Hypergraph& h = m.graph;
  const Expected exp = expected_for(m);
  auto rejected = [&](const Answer& a) { return !judge(exp, a).correct; };
  switch (answer_kind(m.task)) {
    case AnswerKind::count: {
      const std::size_t v = std::get<Count>(m.truth).value;
      return Count{v == 0 || rng.coin() ? v + 1 : v - 1};
    }
    case AnswerKind::path_length: {
      const auto& p = std::get<PathLength>(m.truth);
      return p.value ? PathLength{*p.value + 1} : PathLength{0};
    }
    case AnswerKind::verdict: return Verdict{!std::get<Verdict>(m.truth).value};
    case AnswerKind::vertex_set: {
      VertexSet s = std::get<VertexSet>(m.truth);
      std::vector<std::size_t> outside;
      for (std::size_t v = 0; v < h.num_vertices(); ++v)
        if (std::find(s.begin(), s.end(), VertexId{v}) == s.end()) outside.push_back(v);
      if (s.empty()) {
        s.push_back(VertexId{rng.pick(outside)});
      } else if (!outside.empty()) {
        s[rng.below(s.size())] = VertexId{rng.pick(outside)};
      } else {
        s.erase(s.begin() + long(rng.below(s.size())));
      }
      std::sort(s.begin(), s.end());
      return s;
    }
    case AnswerKind::coloring: {
      const auto& c = std::get<VertexColoring>(m.truth);
      auto order = rng.permutation(c.color.size());
      for (std::size_t v : order)
        for (int col = 0; col < kNumColors; ++col) {
          if (col == c.color[v]) continue;
          VertexColoring bad = c;
          bad.color[v] = col;
          if (rejected(bad)) return bad;
        }
      VertexColoring bad = c;
      bad.color[order.front()] = kNumColors;
      return bad;
    }
    case AnswerKind::cycle:
    case AnswerKind::path: {
      const auto& seq = std::get<HyperedgeSequence>(m.truth);
      auto order = rng.permutation(seq.size());
      for (std::size_t i : order)
        for (std::size_t e : rng.permutation(h.num_edges())) {
          if (e == seq[i].index) continue;
          HyperedgeSequence bad = seq;
          bad[i] = HyperedgeId{e};
          if (rejected(bad)) return bad;
        }
      HyperedgeSequence bad = seq;
      bad.pop_back();
      return bad;
    }
  }
  throw contract_error("unreachable answer kind");
}

struct GradeRecord {
  std::string sample_id;
  std::optional<Answer> parsed;
  bool parse_failure = true;
  bool correct = false;
  std::vector<std::string> flags;
};

inline GradeRecord grade_sample(const QASample& s, std::string_view raw, const ParseOptions& opt = {}) {
  GradeRecord r;
  r.sample_id = s.sample_id;
  auto p = parse_answer(s.task, raw, opt);
  r.flags = p.flags;
  r.parse_failure = p.failed();
  if (p.failed()) return r;
  r.parsed = p.answer;
  auto j = judge(expected_from_spec(s.task, s.answer_spec), *p.answer);
  r.correct = j.correct;
  r.flags.insert(r.flags.end(), j.flags.begin(), j.flags.end());
  return r;
}

inline json to_json(const GradeRecord& r, Task task) {
  return json{{"sample_id", r.sample_id},
              {"correct", r.correct},
              {"parse_failure", r.parse_failure},
              {"flags", r.flags},
              {"parsed", r.parsed ? json(render_canonical_answer(task, *r.parsed)) : json(nullptr)}};
}

using Manifest = std::map<std::string, QASample>;

inline Manifest index_manifest(std::vector<QASample> samples) {
  Manifest m;
  for (auto& s : samples) {
    const std::string id = s.sample_id;
    if (!m.emplace(id, std::move(s)).second) throw std::invalid_argument("duplicate sample id " + id);
  }
  return m;
}

inline std::vector<json> read_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<json> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline Manifest load_manifest(const std::string& path) {
  std::vector<QASample> samples;
  for (const json& j : read_jsonl(path)) samples.push_back(sample_from_json(j));
  return index_manifest(std::move(samples));
}

inline void check_known(const std::vector<GradeRecord>& records, const Manifest& manifest) {
  std::vector<std::string> unknown;
  for (const auto& r : records)
    if (!manifest.count(r.sample_id)) unknown.push_back(r.sample_id);
  if (unknown.empty()) return;
  std::string msg = "records reference unknown samples:";
  for (const auto& id : unknown) msg += " " + id;
  throw std::invalid_argument(msg);
}

struct Tally {
  std::size_t correct = 0;
  std::size_t total = 0;
  std::optional<double> accuracy() const {
    if (total == 0) return std::nullopt;
    return double(correct) / double(total);
  }
};

// Accuracy per task for the whole set ("All") and for each representation,
// marginalized over the other axis.
struct AccuracyTable {
  std::vector<std::string> rows;
  std::map<std::pair<std::string, Task>, Tally> cells;

  std::optional<double> at(const std::string& row, Task t) const {
    auto it = cells.find({row, t});
    return it == cells.end() ? std::nullopt : it->second.accuracy();
  }

  // Mean over the present cells of one task group.
  std::optional<double> group_mean(const std::string& row, bool understanding) const {
    double sum = 0;
    std::size_t k = 0;
    for (Task t : kAllTasks) {
      if (is_understanding(t) != understanding) continue;
      if (auto a = at(row, t)) sum += *a, ++k;
    }
    if (k == 0) return std::nullopt;
    return sum / double(k);
  }
  std::optional<double> avg_u(const std::string& row) const { return group_mean(row, true); }
  std::optional<double> avg_r(const std::string& row) const { return group_mean(row, false); }
};

inline AccuracyTable aggregate(const std::vector<GradeRecord>& records, const Manifest& manifest) {
  if (records.empty()) throw contract_error("aggregate needs at least one record");
  check_known(records, manifest);
  AccuracyTable t;
  t.rows.push_back("All");
  for (TextFormat f : kAllTextFormats) t.rows.emplace_back(text_format_name(f));
  for (VisualFormat f : kAllVisualFormats) t.rows.emplace_back(visual_format_name(f));
  for (const auto& r : records) {
    const QASample& s = manifest.at(r.sample_id);
    for (std::string row : {std::string("All"), std::string(text_format_name(s.combo.text)),
                            std::string(visual_format_name(s.combo.visual))}) {
      Tally& cell = t.cells[{row, s.task}];
      ++cell.total;
      if (r.correct) ++cell.correct;
    }
  }
  return t;
}

inline std::string to_csv(const AccuracyTable& t) {
  auto pct = [](std::optional<double> v) {
    if (!v) return std::string();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", *v * 100.0);
    return std::string(buf);
  };
  std::string out = "axis,representation";
  for (Task task : kAllTasks) out += "," + std::string(task_name(task));
  out += ",Avg.U,Avg.R\n";
  for (const std::string& row : t.rows) {
    std::string axis = row == "All" ? "all" : find_text_format(row) ? "text" : "visual";
    out += axis + "," + row;
    for (Task task : kAllTasks) out += "," + pct(t.at(row, task));
    out += "," + pct(t.avg_u(row)) + "," + pct(t.avg_r(row)) + "\n";
  }
  return out;
}

struct PRMPair {
  std::string meta_id;
  RepCombo combo;
  std::string input_text;
  bool degenerate = false;  // every combo tied
};

struct PrmResult {
  std::vector<PRMPair> pairs;
  std::vector<std::string> warnings;
};

// Per meta, the combos with the highest mean accuracy over the supplied
// records; ties yield one pair each. Metas missing any combo are skipped.
inline PrmResult build_prm(const std::vector<GradeRecord>& records, const Manifest& manifest) {
  check_known(records, manifest);
  std::map<std::string, std::map<RepCombo, Tally>> per_meta;
  std::map<std::string, std::string> input_text;
  for (const auto& r : records) {
    const QASample& s = manifest.at(r.sample_id);
    Tally& cell = per_meta[s.meta_id][s.combo];
    ++cell.total;
    if (r.correct) ++cell.correct;
  }
  for (const auto& [id, s] : manifest)
    if (s.combo.text == TextFormat::HO_Neigh && !input_text.count(s.meta_id)) input_text[s.meta_id] = s.prompt;

  PrmResult out;
  const auto combos = all_combos();
  for (const auto& [meta, tallies] : per_meta) {
    if (tallies.size() != combos.size()) {
      out.warnings.push_back(meta + ": only " + std::to_string(tallies.size()) + " of " +
                             std::to_string(combos.size()) + " combinations graded; skipped");
      continue;
    }
    // Compare correct/total exactly by cross-multiplication.
    auto better = [](const Tally& a, const Tally& b) { return a.correct * b.total > b.correct * a.total; };
    auto same = [](const Tally& a, const Tally& b) { return a.correct * b.total == b.correct * a.total; };
    Tally best = tallies.begin()->second;
    for (const auto& [c, tally] : tallies)
      if (better(tally, best)) best = tally;
    std::vector<RepCombo> winners;
    for (const RepCombo& c : combos)
      if (same(tallies.at(c), best)) winners.push_back(c);
    const bool degenerate = winners.size() == combos.size();
    if (degenerate) out.warnings.push_back(meta + ": all combinations tied");
    for (const RepCombo& c : winners) out.pairs.push_back({meta, c, input_text[meta], degenerate});
  }
  return out;
}

inline json to_json(const PRMPair& p) {
  return json{{"meta_id", p.meta_id}, {"input_text", p.input_text}, {"label_combo", combo_name(p.combo)}};
}

}  // namespace hgvl
