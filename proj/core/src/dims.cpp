#include "sympbranch/dims.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "sympbranch/branching.hpp"
#include "sympbranch/weyl.hpp"

namespace sympbranch::dims {
namespace {

void check_omega(Int n, Int i) {
  if (n < 1) throw std::out_of_range("rank n must be >= 1");
  if (i < 0 || i > n) {
    throw std::out_of_range("ω-index " + std::to_string(i) + " outside [0, " + std::to_string(n) +
                            "]");
  }
}

using Row = std::vector<BigDim>;

// irr dims indexed by ω-index.
Row compute_row(Int n, Prime p) {
  std::vector<BigDim> by_pi(static_cast<std::size_t>(n + 2));
  for (Int l = n + 1; l >= 1; --l) {
    BigDim d = weyl_dim(n, n + 1 - l);
    for (Int m : weyl::factors_lucas(n, l, p)) {
      if (m > l) d -= by_pi[static_cast<std::size_t>(m)];
    }
    by_pi[static_cast<std::size_t>(l)] = d;
  }
  Row row(static_cast<std::size_t>(n + 1));
  for (Int i = 0; i <= n; ++i) row[static_cast<std::size_t>(i)] = by_pi[static_cast<std::size_t>(n + 1 - i)];
  return row;
}

std::shared_ptr<const Row> cached_row(Int n, Prime p) {
  static std::mutex mu;
  static std::map<std::pair<Int, Int>, std::shared_ptr<const Row>> cache;
  const auto key = std::pair{n, p.value()};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto row = std::make_shared<const Row>(compute_row(n, p));
  std::lock_guard lock(mu);
  return cache.try_emplace(key, std::move(row)).first->second;
}

}  // namespace

BigDim binomial(Int n, Int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigDim r = 1;
  for (Int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

BigDim weyl_dim(Int n, Int i) {
  check_omega(n, i);
  return binomial(2 * n, i) - binomial(2 * n, i - 2);
}

BigDim irr_dim(Int n, Int i, Prime p) {
  check_omega(n, i);
  return (*cached_row(n, p))[static_cast<std::size_t>(i)];
}

std::vector<DimsRow> dims_table(Int n, Prime p) {
  if (n < 1) throw std::out_of_range("rank n must be >= 1");
  const auto row = cached_row(n, p);
  std::vector<DimsRow> out;
  for (Int i = 0; i <= n; ++i) out.push_back({i, weyl_dim(n, i), (*row)[static_cast<std::size_t>(i)]});
  return out;
}

BigDim total_dim(const OmegaMultiset& ms, Prime p) {
  BigDim sum = 0;
  for (const auto& [label, mult] : ms) sum += irr_dim(label.n, label.i, p) * mult;
  return sum;
}

bool check_branch_dims(Int n, Int i, Prime p) {
  return irr_dim(n, i, p) == total_dim(branching::branch_omega(n, i, p), p);
}

std::pair<PiMultiset, PiMultiset> filtration_sides(Int n, Int l, Prime p) {
  if (n < 2) throw std::out_of_range("filtration identity needs rank n >= 2");
  weyl::check_weyl_range(n, l);
  PiMultiset lhs;
  for (Int m : weyl::factors_lucas(n, l, p)) lhs.merge(branching::branch_pi(n, m, p));
  PiMultiset rhs;
  rhs.merge(weyl::composition_factors(n - 1, l - 1, p));
  rhs.merge(weyl::composition_factors(n - 1, l, p), 2);
  rhs.merge(weyl::composition_factors(n - 1, l + 1, p));
  return {std::move(lhs), std::move(rhs)};
}

bool check_filtration_identity(Int n, Int l, Prime p) {
  const auto [lhs, rhs] = filtration_sides(n, l, p);
  return lhs == rhs;
}

}  // namespace sympbranch::dims
