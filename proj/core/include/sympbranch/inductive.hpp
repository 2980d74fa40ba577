#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "sympbranch/padic.hpp"

// Inductive systems of fundamental representations for Sp_∞, checked on
// finite truncations: ranks 1..n_max.

namespace sympbranch {

/// F (all fundamentals), L(s) (ω_0..ω_s), R(u) (the top u indices) or LR(s, u).
struct FamilySpec {
  enum class Kind { F, L, R, LR };

  Kind kind = Kind::F;
  Int s = 0;
  Int u = 0;

  static FamilySpec full() { return {Kind::F, 0, 0}; }
  static FamilySpec left(Int s);
  static FamilySpec right(Int u);
  static FamilySpec left_right(Int s, Int u);

  bool operator==(const FamilySpec&) const = default;
};

std::string to_string(const FamilySpec& spec);

/// Accepts "F", "L:s", "R:u", "LR:s:u" (also "L(s)", "R(u)", "LR(s,u)").
FamilySpec parse_family(std::string_view text);

/// The set Ψ_n of ω-indices present at rank n.
struct LevelSet {
  Int n = 1;
  std::set<Int> reps;

  bool operator==(const LevelSet&) const = default;
};

namespace inductive {

LevelSet family_level(const FamilySpec& spec, Int n);

/// Union of composition factors of the restrictions of every rep to rank n-1.
LevelSet branch_set(const LevelSet& level, Prime p);

struct Failure {
  Int n;
  LevelSet expected;
  LevelSet got;
};

struct VerifyReport {
  FamilySpec spec;
  Int p = 0;
  Int n_min = 1;
  Int n_max = 0;
  bool holds = true;
  std::optional<Failure> first_failure;
};

/// Checks branch_set(level(n+1)) == level(n) for every 2 <= n+1 <= n_max.
VerifyReport verify_family(const FamilySpec& spec, Prime p, Int n_max);

bool is_R_inductive(Int u, Prime p, Int n_max);

/// x = p^t for some t >= 1.
bool is_power_of(Int x, Prime p);

struct Classification {
  std::optional<FamilySpec> spec;
  std::string diagnostic;
};

/// Matches consecutive levels against F, L(s), R(p^t-1) and LR(s, p^t-1),
/// with parameters limited to those distinguishable at the top rank.
/// Throws std::invalid_argument on empty input, an empty level or a rank gap.
Classification classify_truncation(std::span<const LevelSet> levels, Prime p);

/// Largest π-index reached from π_i by restriction (at a rank large enough
/// that nothing is truncated).
Int max_reach(Int i, Prime p);

/// Smallest u' >= u such that R(u') is closed under restriction.
Int r_closure(Int u, Prime p);

/// One step of the escalation argument: for p^{t-1} <= l < p^t - 1, the
/// π-index that R^l forces into the system next. It exceeds l.
Int escalation_step(Int l, Prime p);

}  // namespace inductive
}  // namespace sympbranch
