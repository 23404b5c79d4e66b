#pragma once

#include <optional>
#include <string>
#include <variant>

#include "hypergvl/io.hpp"
#include "hypergvl/tasks.hpp"
#include "hypergvl/verify.hpp"

namespace hgvl {

struct Count {
  std::size_t value = 0;
  friend bool operator==(const Count&, const Count&) = default;
};

// Empty value means "No path".
struct PathLength {
  std::optional<std::size_t> value;
  friend bool operator==(const PathLength&, const PathLength&) = default;
};

struct Verdict {
  bool value = false;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

using Answer = std::variant<Count, VertexSet, PathLength, Verdict, VertexColoring, HyperedgeSequence>;

enum class AnswerKind { count, vertex_set, path_length, verdict, coloring, cycle, path };

inline AnswerKind answer_kind(Task t) {
  switch (t) {
    case Task::VC:
    case Task::HEC:
    case Task::DVC:
    case Task::OEC:
    case Task::OMF: return AnswerKind::count;
    case Task::Ne:
    case Task::ONe: return AnswerKind::vertex_set;
    case Task::OSP: return AnswerKind::path_length;
    case Task::ISM: return AnswerKind::verdict;
    case Task::ThreeCL: return AnswerKind::coloring;
    case Task::SHC: return AnswerKind::cycle;
    case Task::HHM: return AnswerKind::path;
  }
  return AnswerKind::count;
}

inline std::string_view answer_kind_name(AnswerKind k) {
  switch (k) {
    case AnswerKind::count: return "integer";
    case AnswerKind::vertex_set: return "vertex_set";
    case AnswerKind::path_length: return "path_length";
    case AnswerKind::verdict: return "yes_no";
    case AnswerKind::coloring: return "coloring";
    case AnswerKind::cycle: return "cycle";
    case AnswerKind::path: return "path";
  }
  return "?";
}

// Whether `a` holds the alternative the task expects.
inline bool answer_fits(Task t, const Answer& a) {
  switch (answer_kind(t)) {
    case AnswerKind::count: return std::holds_alternative<Count>(a);
    case AnswerKind::vertex_set: return std::holds_alternative<VertexSet>(a);
    case AnswerKind::path_length: return std::holds_alternative<PathLength>(a);
    case AnswerKind::verdict: return std::holds_alternative<Verdict>(a);
    case AnswerKind::coloring: return std::holds_alternative<VertexColoring>(a);
    case AnswerKind::cycle:
    case AnswerKind::path: return std::holds_alternative<HyperedgeSequence>(a);
  }
  return false;
}

// The exact answer string the prompt asks for.
inline std::string render_canonical_answer(Task t, const Answer& a) {
  if (!answer_fits(t, a)) throw contract_error("answer type does not match task " + std::string(task_name(t)));
  switch (answer_kind(t)) {
    case AnswerKind::count: return std::to_string(std::get<Count>(a).value);
    case AnswerKind::vertex_set: {
      const auto& s = std::get<VertexSet>(a);
      if (s.empty()) return t == Task::ONe ? "No n-neighbors" : "No neighbors";
      std::string out = "{";
      for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + to_string(s[i]);
      return out + "}";
    }
    case AnswerKind::path_length: {
      const auto& p = std::get<PathLength>(a);
      return p.value ? std::to_string(*p.value) : "No path";
    }
    case AnswerKind::verdict: return std::get<Verdict>(a).value ? "Yes" : "No";
    case AnswerKind::coloring: return format_coloring(std::get<VertexColoring>(a));
    case AnswerKind::cycle: return format_cycle(std::get<HyperedgeSequence>(a));
    case AnswerKind::path: return format_path(std::get<HyperedgeSequence>(a));
  }
  return {};
}

inline json answer_to_json(const Answer& a) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Count>) {
          return v.value;
        } else if constexpr (std::is_same_v<T, PathLength>) {
          return v.value ? json(*v.value) : json(nullptr);
        } else if constexpr (std::is_same_v<T, Verdict>) {
          return v.value;
        } else if constexpr (std::is_same_v<T, VertexColoring>) {
          return v.color;
        } else {
          json out = json::array();
          for (const auto& id : v) out.push_back(to_string(id));
          return out;
        }
      },
      a);
}

inline std::size_t id_from_string(const std::string& s, char prefix) {
  if (s.size() < 2 || s[0] != prefix || s.find_first_not_of("0123456789", 1) != std::string::npos)
    throw std::invalid_argument("bad id '" + s + "'");
  return std::stoul(s.substr(1));
}

inline Answer answer_from_json(Task t, const json& j) {
  switch (answer_kind(t)) {
    case AnswerKind::count: return Count{j.get<std::size_t>()};
    case AnswerKind::vertex_set: {
      VertexSet s;
      for (const auto& x : j) s.push_back(VertexId{id_from_string(x.get<std::string>(), 'v')});
      return s;
    }
    case AnswerKind::path_length:
      return j.is_null() ? PathLength{} : PathLength{j.get<std::size_t>()};
    case AnswerKind::verdict: return Verdict{j.get<bool>()};
    case AnswerKind::coloring: return VertexColoring{j.get<std::vector<int>>()};
    case AnswerKind::cycle:
    case AnswerKind::path: {
      HyperedgeSequence seq;
      for (const auto& x : j) seq.push_back(HyperedgeId{id_from_string(x.get<std::string>(), 'e')});
      return seq;
    }
  }
  throw contract_error("unreachable answer kind");
}

}  // namespace hgvl
