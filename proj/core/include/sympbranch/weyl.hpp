#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sympbranch/labels.hpp"
#include "sympbranch/padic.hpp"
#include "sympbranch/poset.hpp"

// Structure of the fundamental Weyl modules V_l^n = W_{n+1-l}^n of Sp_{2n}
// in characteristic p. Everything here is indexed in π-coordinates: the
// composition factors of V_l^n are π_m^n for m in a set of "factor indices".

namespace sympbranch {

/// Closed integer interval [lo, hi].
struct Interval {
  Int lo = 0;
  Int hi = 0;
  bool operator==(const Interval&) const = default;
};

/// Finite set of nonnegative integers kept as sorted, disjoint, non-adjacent
/// intervals, so equal sets compare equal structurally.
class QSet {
 public:
  QSet() = default;
  explicit QSet(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  bool contains(Int x) const noexcept;
  bool is_subset_of(const QSet& other) const noexcept;
  Int cardinality() const noexcept;

  bool operator==(const QSet&) const = default;

 private:
  std::vector<Interval> intervals_;
};

/// A strictly decreasing, even-length tuple (λ_1; ...; λ_2t) that is
/// admissible for its base l: l_{λ_{2j-1}} != p-1 and l_{λ_{2j}} != 0.
/// Construction validates all of this.
class AdmissibleTuple {
 public:
  AdmissibleTuple(std::vector<Int> lambdas, Int base, Prime p);
  static AdmissibleTuple empty(Int base, Prime p) { return {{}, base, p}; }

  const std::vector<Int>& lambdas() const noexcept { return lambdas_; }
  Int base() const noexcept { return base_; }
  Prime prime() const noexcept { return p_; }
  bool is_empty() const noexcept { return lambdas_.empty(); }
  std::size_t pairs() const noexcept { return lambdas_.size() / 2; }

  bool operator==(const AdmissibleTuple&) const = default;

 private:
  std::vector<Int> lambdas_;
  Int base_;
  Prime p_;
};

struct Factor {
  Int index;
  AdmissibleTuple tuple;
  QSet qset;
};

/// Composition factors of V_l^n ordered by m ≺ q iff Q(q) ⊆ Q(m); the
/// relation is reflexive. Factors are stored by ascending index.
class FactorPoset {
 public:
  FactorPoset(Int n, Int l, Prime p, std::vector<Factor> factors);

  Int rank() const noexcept { return n_; }
  Int base() const noexcept { return l_; }
  Prime prime() const noexcept { return p_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::vector<Int> indices() const;
  const Factor& at(Int index) const;

  bool precedes(Int m, Int q) const;
  Int top() const noexcept { return l_; }
  std::vector<Int> minimal_elements() const;
  std::vector<Int> maximal_elements() const;
  /// Covering pairs (smaller, larger) in ≺.
  std::vector<std::pair<Int, Int>> covers() const;
  const FinitePoset& order() const noexcept { return order_; }

 private:
  std::size_t position(Int index) const;

  Int n_;
  Int l_;
  Prime p_;
  std::vector<Factor> factors_;
  FinitePoset order_;
};

namespace weyl {

inline constexpr std::size_t kDefaultIdealCap = 1'000'000;

/// Throws std::out_of_range unless n >= 1 and 1 <= l <= n+1.
void check_weyl_range(Int n, Int l);

/// {l+2k : k ⊂_p l+2k, l+2k <= n+1}, ascending.
std::vector<Int> factors_lucas(Int n, Int l, Prime p);

/// s_λ(l) = l+2k where k = (-l) mod p^λ.
Int reflection(Int lambda, Int l, Prime p);

/// s_λ moves l admissibly iff λ > lp(l) and l_λ != p-1.
bool reflection_admissible(Int lambda, Int l, Prime p);

/// {l} together with every value <= n+1 reachable by admissible reflections
/// with strictly decreasing λ, ascending.
std::vector<Int> factors_reflections(Int n, Int l, Prime p);

/// Checks the digit conditions. Throws std::invalid_argument if the tuple is
/// not strictly decreasing, has odd length, or has a negative entry.
bool tuple_admissible(std::span<const Int> lambdas, Int l, Prime p);

/// l^σ from the digit formula.
Int apply_tuple(const AdmissibleTuple& sigma);
Int apply_tuple(std::span<const Int> lambdas, Int l, Prime p);

QSet q_set(const AdmissibleTuple& sigma);

/// Lexicographic tuple order in which a proper prefix is smaller.
bool tuple_leq(const AdmissibleTuple& a, const AdmissibleTuple& b);

/// The unique admissible σ with l^σ = m, found by scanning the digits of
/// k = (m-l)/2 and m. Throws std::invalid_argument if m is not a factor index
/// of some V_l (m = l, or m-l = 2k > 0 with k ⊂_p m).
AdmissibleTuple tuple_of_factor(Int l, Int m, Prime p);

/// Greedy maximal tuple whose value bounds the largest factor index.
AdmissibleTuple sigma_max(Int n, Int l, Prime p);

FactorPoset factor_poset(Int n, Int l, Prime p);

bool is_irreducible(Int n, Int l, Prime p);

/// Index of the (simple) socle of V_l^n.
Int socle_factor(Int n, Int l, Prime p);

/// Order ideals of the factor poset (submodules of V_l^n), each as ascending
/// factor indices. Throws CapExceeded past `cap` ideals.
std::vector<std::vector<Int>> submodule_ideals(Int n, Int l, Prime p,
                                               std::size_t cap = kDefaultIdealCap);

/// Composition factors of V_l^n as a multiset; empty when l is outside
/// [1, n+1] (the Weyl module is zero there).
PiMultiset composition_factors(Int n, Int l, Prime p);

}  // namespace weyl
}  // namespace sympbranch
