#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sympbranch/padic.hpp"

namespace sympbranch::selftest {

struct GridBounds {
  Int pmax = 7;
  Int nmax = 40;
  Int nmax_factors = 60;
  Int lucas_max = 2000;
  Int exact_binomial_max = 200;
  Int inductive_nmax = 30;
};

/// Reads "pmax:nmax" (the SYMPBRANCH_GRID format). Throws std::invalid_argument.
GridBounds parse_grid(const std::string& text, GridBounds base = {});

struct Counterexample {
  Int p = 0;
  Int n = 0;
  Int index = 0;
  std::string expected;
  std::string got;
};

struct CheckResult {
  std::string name;
  std::optional<Counterexample> failure;
  double seconds = 0;
};

/// Runs every invariant over the grid. Primes are sharded over `jobs`
/// workers; within a check the reported counterexample is the first in
/// (p, n, index) order no matter which shard finishes first.
std::vector<CheckResult> run(const GridBounds& grid, unsigned jobs,
                             const std::function<void(const CheckResult&)>& on_done = {});

}  // namespace sympbranch::selftest
