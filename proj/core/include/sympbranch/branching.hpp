#pragma once

#include <algorithm>
#include <vector>

#include "sympbranch/labels.hpp"
#include "sympbranch/padic.hpp"
#include "sympbranch/poset.hpp"

// Restriction of fundamental modules from G_n = Sp_{2n} to G_{n-1}.
// Computation happens in π-coordinates; the ω entry points convert at the
// boundary.

namespace sympbranch {

/// Socle series, socle first. Layers are never empty.
template <class Label>
struct SocleSeries {
  std::vector<LabelMultiset<Label>> layers;

  std::size_t length() const noexcept { return layers.size(); }
  bool empty() const noexcept { return layers.empty(); }
  bool is_palindromic() const { return std::equal(layers.begin(), layers.end(), layers.rbegin()); }

  LabelMultiset<Label> flatten() const {
    LabelMultiset<Label> all;
    for (const auto& layer : layers) all.merge(layer);
    return all;
  }

  bool operator==(const SocleSeries&) const = default;
};

/// ω_i^n↓G_{n-1} = ω_{i-1} ⊕ ω_{i-1} ⊕ D. `split` holds the two copies and
/// `d_part` is the socle series of D (empty when D = 0).
template <class Label>
struct RestrictionStructure {
  Label source;
  LabelMultiset<Label> split;
  SocleSeries<Label> d_part;

  LabelMultiset<Label> flatten() const {
    auto all = d_part.flatten();
    all.merge(split);
    return all;
  }
};

/// Poset on the individual composition factors of a socle series: a < b
/// iff a sits in a strictly lower layer. For the uniserial and
/// single-diamond shapes that D takes, its order ideals are the submodules.
template <class Label>
FinitePoset layer_poset(const SocleSeries<Label>& series) {
  std::vector<std::size_t> layer_of;
  for (std::size_t q = 0; q < series.layers.size(); ++q)
    for (const auto& [label, mult] : series.layers[q])
      for (Int c = 0; c < mult; ++c) layer_of.push_back(q);
  return FinitePoset(layer_of.size(), [&](std::size_t a, std::size_t b) {
    return a == b || layer_of[a] < layer_of[b];
  });
}

namespace branching {

struct EpsD {
  Int d = 0;
  int eps = 0;
  bool operator==(const EpsD&) const = default;
};

/// d = lp(i); ε = 0 iff i ≡ -p^d (mod p^{d+1}).
EpsD eps_d(Int i, Prime p);

/// Coefficient of π_{i-1+2p^t} in the restriction of π_i: 0, 1 or 2.
int b_coeff(Int t, Int i, Prime p);

/// Composition factors of π_i^n↓G_{n-1}, as π-labels of rank n-1.
PiMultiset branch_pi(Int n, Int i, Prime p);

/// Composition factors of ω_i^n↓G_{n-1}, as ω-labels of rank n-1.
OmegaMultiset branch_omega(Int n, Int i, Prime p);

/// Restriction structure for π_i^n with 1 <= i <= n (π-coordinates).
RestrictionStructure<PiLabel> restriction_structure_pi(Int n, Int i, Prime p);

/// Restriction structure for ω_i^n with 1 <= i <= n (ω-coordinates).
RestrictionStructure<OmegaLabel> restriction_structure(Int n, Int i, Prime p);

/// ω_i^n↓G_{n-1} is completely reducible iff i = 0, 1 or p ∤ n+1-i.
bool is_completely_reducible(Int n, Int i, Prime p);

/// Number of submodules of D for ω_i^n, counting 0 and D.
Int d_submodule_count(Int n, Int i, Prime p);

}  // namespace branching
}  // namespace sympbranch
