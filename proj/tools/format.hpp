#pragma once

#include <string>

#include "sympbranch/inductive.hpp"
#include "sympbranch/labels.hpp"

namespace sympbranch::cli {

inline std::string format_label(const OmegaLabel& w) { return "ω_" + std::to_string(w.i); }
inline std::string format_label(const PiLabel& p) { return "π_" + std::to_string(p.m); }

/// "ω_2 + 2ω_1 + 2ω_0" style sum, ascending by index; "0" when empty.
template <class Label>
std::string format_sum(const LabelMultiset<Label>& ms, const char* sep = " + ") {
  std::string s;
  for (const auto& [label, mult] : ms) {
    if (!s.empty()) s += sep;
    if (mult != 1) s += std::to_string(mult);
    s += format_label(label);
  }
  return s.empty() ? "0" : s;
}

template <class Label>
std::string format_multiset(const LabelMultiset<Label>& ms) {
  std::string s = "{";
  for (const auto& [label, mult] : ms) {
    if (s.size() > 1) s += ", ";
    s += format_label(label) + ":" + std::to_string(mult);
  }
  return s + "}";
}

inline std::string format_level(const LevelSet& level) {
  std::string s = "{";
  for (Int i : level.reps) {
    if (s.size() > 1) s += ", ";
    s += format_label(OmegaLabel{level.n, i});
  }
  return s + "}";
}

}  // namespace sympbranch::cli
