#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hgvl {

enum class Task { VC, HEC, Ne, DVC, OEC, ONe, OSP, OMF, ISM, ThreeCL, SHC, HHM };

inline constexpr std::array<Task, 12> kAllTasks = {Task::VC,  Task::HEC, Task::Ne,  Task::DVC,
                                                   Task::OEC, Task::ONe, Task::OSP, Task::OMF,
                                                   Task::ISM, Task::ThreeCL, Task::SHC, Task::HHM};

inline std::string_view task_name(Task t) {
  switch (t) {
    case Task::VC: return "VC";
    case Task::HEC: return "HEC";
    case Task::Ne: return "Ne";
    case Task::DVC: return "DVC";
    case Task::OEC: return "OEC";
    case Task::ONe: return "ONe";
    case Task::OSP: return "OSP";
    case Task::OMF: return "OMF";
    case Task::ISM: return "ISM";
    case Task::ThreeCL: return "3-CL";
    case Task::SHC: return "SHC";
    case Task::HHM: return "HHM";
  }
  return "?";
}

// Difficulty level 1-4.
inline int task_level(Task t) {
  switch (t) {
    case Task::VC:
    case Task::HEC:
    case Task::Ne: return 1;
    case Task::DVC:
    case Task::OEC:
    case Task::ONe: return 2;
    case Task::OSP:
    case Task::OMF:
    case Task::ISM: return 3;
    default: return 4;
  }
}

inline bool is_understanding(Task t) { return task_level(t) <= 2; }

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

// Accepts display names case-insensitively, with or without the dash in "3-CL".
inline Task parse_task(std::string_view name) {
  std::string key = lowercase(name);
  key.erase(std::remove(key.begin(), key.end(), '-'), key.end());
  for (Task t : kAllTasks) {
    std::string candidate = lowercase(task_name(t));
    candidate.erase(std::remove(candidate.begin(), candidate.end(), '-'), candidate.end());
    if (candidate == key) return t;
  }
  throw std::invalid_argument("unknown task '" + std::string(name) + "'");
}

}  // namespace hgvl
