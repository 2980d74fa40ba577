#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sympbranch/labels.hpp"
#include "sympbranch/padic.hpp"

namespace sympbranch {

/// Exact dimension. C(80, 40) already needs more than 64 bits.
using BigDim = boost::multiprecision::cpp_int;

namespace dims {

/// Exact binomial coefficient; zero when k < 0 or k > n.
BigDim binomial(Int n, Int k);

/// dim W_i^n = C(2n, i) - C(2n, i-2).
BigDim weyl_dim(Int n, Int i);

/// dim ω_i^n in characteristic p, peeled off the Weyl modules from the top
/// (π_{n+1} = trivial) down. Rows are cached per (n, p); the cache is
/// thread-safe.
BigDim irr_dim(Int n, Int i, Prime p);

struct DimsRow {
  Int i;
  BigDim weyl;
  BigDim irr;
};

/// One row per ω-index 0..n.
std::vector<DimsRow> dims_table(Int n, Prime p);

/// dim of a multiset of irreducibles (ω-labels may have mixed ranks).
BigDim total_dim(const OmegaMultiset& ms, Prime p);

bool check_branch_dims(Int n, Int i, Prime p);

/// Both sides of V_l^n↓G_{n-1} ~ V_{l-1} + 2V_l + V_{l+1}: the left side
/// branches each factor of V_l^n, the right side adds up Weyl factors at
/// rank n-1.
std::pair<PiMultiset, PiMultiset> filtration_sides(Int n, Int l, Prime p);

bool check_filtration_identity(Int n, Int l, Prime p);

}  // namespace dims
}  // namespace sympbranch
