#pragma once

#include <compare>
#include <map>
#include <stdexcept>

#include "sympbranch/padic.hpp"

namespace sympbranch {

/// ω_i^n, the i-th fundamental module of Sp_{2n}. Indices outside [0, n]
/// name the zero module; i = 0 is the trivial module.
struct OmegaLabel {
  Int n = 1;
  Int i = 0;

  bool is_zero() const noexcept { return i < 0 || i > n; }
  bool is_trivial() const noexcept { return i == 0; }
  Int index() const noexcept { return i; }
  auto operator<=>(const OmegaLabel&) const = default;
};

/// π_m^n = ω_{n+1-m}^n. Nonzero iff 1 <= m <= n+1; m = n+1 is trivial.
struct PiLabel {
  Int n = 1;
  Int m = 1;

  bool is_zero() const noexcept { return m < 1 || m > n + 1; }
  bool is_trivial() const noexcept { return m == n + 1; }
  Int index() const noexcept { return m; }
  auto operator<=>(const PiLabel&) const = default;
};

constexpr PiLabel omega_to_pi(OmegaLabel w) noexcept { return {w.n, w.n + 1 - w.i}; }
constexpr OmegaLabel pi_to_omega(PiLabel p) noexcept { return {p.n, p.n + 1 - p.m}; }

/// Multiset of composition factors. Zero labels are dropped on insertion,
/// so a zero module never shows up with a multiplicity.
template <class Label>
class LabelMultiset {
 public:
  using Map = std::map<Label, Int>;
  using const_iterator = typename Map::const_iterator;

  LabelMultiset() = default;

  void add(Label label, Int mult = 1) {
    if (mult < 0) throw std::invalid_argument("LabelMultiset: negative multiplicity");
    if (mult == 0 || label.is_zero()) return;
    entries_[label] += mult;
  }

  void merge(const LabelMultiset& other, Int scale = 1) {
    for (const auto& [label, mult] : other.entries_) add(label, mult * scale);
  }

  Int multiplicity(Label label) const {
    auto it = entries_.find(label);
    return it == entries_.end() ? 0 : it->second;
  }

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t distinct() const noexcept { return entries_.size(); }

  Int total() const noexcept {
    Int t = 0;
    for (const auto& [label, mult] : entries_) t += mult;
    return t;
  }

  const_iterator begin() const noexcept { return entries_.begin(); }
  const_iterator end() const noexcept { return entries_.end(); }

  bool operator==(const LabelMultiset&) const = default;

 private:
  Map entries_;
};

using OmegaMultiset = LabelMultiset<OmegaLabel>;
using PiMultiset = LabelMultiset<PiLabel>;

OmegaMultiset to_omega(const PiMultiset& ms);
PiMultiset to_pi(const OmegaMultiset& ms);

}  // namespace sympbranch
