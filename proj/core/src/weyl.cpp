#include "sympbranch/weyl.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace sympbranch {

using padic::digit;
using padic::ipow;
using padic::lp;
using padic::num_digits;

QSet::QSet(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) {
    if (iv.lo < 0 || iv.lo > iv.hi) throw std::invalid_argument("QSet: bad interval");
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const auto& iv : intervals) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi + 1) {
      intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
    } else {
      intervals_.push_back(iv);
    }
  }
}

bool QSet::contains(Int x) const noexcept {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [x](const Interval& iv) { return iv.lo <= x && x <= iv.hi; });
}

bool QSet::is_subset_of(const QSet& other) const noexcept {
  // Intervals are maximal runs, so each must sit inside a single run of `other`.
  return std::all_of(intervals_.begin(), intervals_.end(), [&](const Interval& iv) {
    return std::any_of(other.intervals_.begin(), other.intervals_.end(),
                       [&](const Interval& ov) { return ov.lo <= iv.lo && iv.hi <= ov.hi; });
  });
}

Int QSet::cardinality() const noexcept {
  Int c = 0;
  for (const auto& iv : intervals_) c += iv.hi - iv.lo + 1;
  return c;
}

AdmissibleTuple::AdmissibleTuple(std::vector<Int> lambdas, Int base, Prime p)
    : lambdas_(std::move(lambdas)), base_(base), p_(p) {
  if (base < 1) throw std::invalid_argument("AdmissibleTuple: base must be positive");
  if (!weyl::tuple_admissible(lambdas_, base, p)) {
    throw std::invalid_argument("tuple is not admissible for l=" + std::to_string(base));
  }
}

FactorPoset::FactorPoset(Int n, Int l, Prime p, std::vector<Factor> factors)
    : n_(n), l_(l), p_(p), factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& a, const Factor& b) { return a.index < b.index; });
  order_ = FinitePoset(factors_.size(), [this](std::size_t a, std::size_t b) {
    return factors_[b].qset.is_subset_of(factors_[a].qset);
  });
}

std::vector<Int> FactorPoset::indices() const {
  std::vector<Int> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.index);
  return out;
}

std::size_t FactorPoset::position(Int index) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), index,
                             [](const Factor& f, Int v) { return f.index < v; });
  if (it == factors_.end() || it->index != index) {
    throw std::out_of_range("no composition factor with index " + std::to_string(index));
  }
  return static_cast<std::size_t>(it - factors_.begin());
}

const Factor& FactorPoset::at(Int index) const { return factors_[position(index)]; }

bool FactorPoset::precedes(Int m, Int q) const { return order_.leq(position(m), position(q)); }

std::vector<Int> FactorPoset::minimal_elements() const {
  std::vector<Int> out;
  for (auto a : order_.minimal_elements()) out.push_back(factors_[a].index);
  return out;
}

std::vector<Int> FactorPoset::maximal_elements() const {
  std::vector<Int> out;
  for (auto a : order_.maximal_elements()) out.push_back(factors_[a].index);
  return out;
}

std::vector<std::pair<Int, Int>> FactorPoset::covers() const {
  std::vector<std::pair<Int, Int>> out;
  for (auto [a, b] : order_.covers()) out.emplace_back(factors_[a].index, factors_[b].index);
  return out;
}

namespace weyl {
namespace {

// Sum of digits lo..hi of x, re-based so digit lo has weight 1.
Int window(Int x, Int lo, Int hi, Prime p) {
  Int v = 0;
  for (Int i = hi; i >= lo; --i) v = v * p.value() + digit(x, i, p);
  return v;
}

// Largest λ with p^λ <= bound.
Int max_lambda(Int bound, Prime p) {
  Int lambda = 0;
  for (Int pw = p.value(); pw <= bound; pw *= p.value()) ++lambda;
  return lambda;
}

// Greedy lexicographic maximum among admissible tuples whose first entry is
// below `bound`, appended to `out`.
void append_maximal_tuple(Int l, Int bound, Prime p, std::vector<Int>& out) {
  const int top_digit = static_cast<int>(p.value()) - 1;
  while (true) {
    std::optional<std::pair<Int, Int>> pick;
    for (Int a = bound - 1; a >= 1 && !pick; --a) {
      if (digit(l, a, p) == top_digit) continue;
      for (Int b = a - 1; b >= 0; --b) {
        if (digit(l, b, p) != 0) {
          pick = std::pair{a, b};
          break;
        }
      }
    }
    if (!pick) return;
    out.push_back(pick->first);
    out.push_back(pick->second);
    bound = pick->second;
  }
}

void collect_reflections(Int value, Int upper, Int n, Prime p, std::set<Int>& out) {
  for (Int lambda = 0; lambda < upper; ++lambda) {
    if (!reflection_admissible(lambda, value, p)) continue;
    const Int m = reflection(lambda, value, p);
    if (m > n + 1) continue;
    out.insert(m);
    collect_reflections(m, lambda, n, p, out);
  }
}

// v, u and s of the irreducibility / socle criteria. v is the top digit where
// l and n' differ; u is only meaningful when l_v + 1 = n'_v.
struct DigitMarks {
  Int v = -1;
  std::optional<Int> u;
  Int s = 0;
};

DigitMarks digit_marks(Int n, Int l, Prime p) {
  const Int np = n + 1;
  const Int pm1 = p.value() - 1;
  DigitMarks mk;
  mk.s = lp(l, p);
  for (Int i = std::max(num_digits(np, p), num_digits(l, p)); i >= 0; --i) {
    if (digit(l, i, p) != digit(np, i, p)) {
      mk.v = i;
      break;
    }
  }
  if (digit(l, mk.v, p) + 1 == digit(np, mk.v, p)) {
    Int u = -1;
    for (Int i = mk.v - 1; i >= 0; --i) {
      if (pm1 - digit(l, i, p) != digit(np, i, p)) {
        u = i;
        break;
      }
    }
    mk.u = u;
  }
  return mk;
}

}  // namespace

void check_weyl_range(Int n, Int l) {
  if (n < 1) throw std::out_of_range("rank n must be >= 1");
  if (l < 1 || l > n + 1) {
    throw std::out_of_range("index l=" + std::to_string(l) + " outside [1, " +
                            std::to_string(n + 1) + "]");
  }
}

std::vector<Int> factors_lucas(Int n, Int l, Prime p) {
  check_weyl_range(n, l);
  std::vector<Int> out;
  for (Int k = 0; l + 2 * k <= n + 1; ++k) {
    if (padic::contains(k, l + 2 * k, p)) out.push_back(l + 2 * k);
  }
  return out;
}

Int reflection(Int lambda, Int l, Prime p) {
  if (lambda < 0) throw std::invalid_argument("reflection: negative λ");
  if (l < 0) throw std::invalid_argument("reflection: negative l");
  const Int modulus = ipow(p.value(), lambda);
  const Int k = (modulus - l % modulus) % modulus;
  return l + 2 * k;
}

bool reflection_admissible(Int lambda, Int l, Prime p) {
  if (l < 1) throw std::invalid_argument("reflection_admissible: l must be positive");
  return lambda > lp(l, p) && digit(l, lambda, p) != p.value() - 1;
}

std::vector<Int> factors_reflections(Int n, Int l, Prime p) {
  check_weyl_range(n, l);
  std::set<Int> found{l};
  collect_reflections(l, max_lambda(n + 1, p) + 1, n, p, found);
  return {found.begin(), found.end()};
}

bool tuple_admissible(std::span<const Int> lambdas, Int l, Prime p) {
  if (lambdas.size() % 2 != 0) throw std::invalid_argument("tuple has odd length");
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    if (lambdas[j] < 0) throw std::invalid_argument("tuple has a negative entry");
    if (j > 0 && lambdas[j] >= lambdas[j - 1]) {
      throw std::invalid_argument("tuple is not strictly decreasing");
    }
  }
  for (std::size_t j = 0; j < lambdas.size(); j += 2) {
    if (digit(l, lambdas[j], p) == p.value() - 1) return false;
    if (digit(l, lambdas[j + 1], p) == 0) return false;
  }
  return true;
}

Int apply_tuple(const AdmissibleTuple& sigma) {
  const Prime p = sigma.prime();
  const Int l = sigma.base();
  const auto& lam = sigma.lambdas();
  if (lam.empty()) return l;
  const QSet q = q_set(sigma);
  const Int top = std::max(num_digits(l, p), lam.front() + 1);
  Int value = 0;
  for (Int i = top - 1; i >= 0; --i) {
    const int li = digit(l, i, p);
    const int delta = std::find(lam.begin(), lam.end(), i) != lam.end() ? 1 : 0;
    const int d = (q.contains(i) ? padic::bar(li, p) : li) + delta;
    value = value * p.value() + d;
  }
  return value;
}

Int apply_tuple(std::span<const Int> lambdas, Int l, Prime p) {
  return apply_tuple(AdmissibleTuple({lambdas.begin(), lambdas.end()}, l, p));
}

QSet q_set(const AdmissibleTuple& sigma) {
  const auto& lam = sigma.lambdas();
  std::vector<Interval> ivs;
  for (std::size_t j = 0; j < lam.size(); j += 2) ivs.push_back({lam[j + 1], lam[j] - 1});
  return QSet(std::move(ivs));
}

bool tuple_leq(const AdmissibleTuple& a, const AdmissibleTuple& b) {
  const auto& x = a.lambdas();
  const auto& y = b.lambdas();
  std::size_t f = 0;
  while (f < x.size() && f < y.size() && x[f] == y[f]) ++f;
  if (f == x.size()) return true;
  return f < y.size() && x[f] < y[f];
}

AdmissibleTuple tuple_of_factor(Int l, Int m, Prime p) {
  if (l < 1) throw std::invalid_argument("tuple_of_factor: l must be positive");
  if (m == l) return AdmissibleTuple::empty(l, p);
  if (m < l || (m - l) % 2 != 0 || !padic::contains((m - l) / 2, m, p)) {
    throw std::invalid_argument("m=" + std::to_string(m) + " is not a factor index for l=" +
                                std::to_string(l));
  }
  const Int k = (m - l) / 2;
  const Int top = num_digits(m, p) + 1;
  std::vector<Int> taus;
  Int last = -1;
  while (true) {
    Int start = -1;
    for (Int i = last + 1; i < top; ++i) {
      const int md = digit(m, i, p);
      if (md != 0 && digit(k, i, p) == md) {
        start = i;
        break;
      }
    }
    if (start < 0) break;
    Int stop = start + 1;
    while (digit(k, stop, p) == digit(m, stop, p)) {
      if (++stop > top) throw std::logic_error("tuple_of_factor: digit scan ran off the end");
    }
    taus.push_back(start);
    taus.push_back(stop);
    last = stop;
  }
  AdmissibleTuple sigma({taus.rbegin(), taus.rend()}, l, p);
  if (apply_tuple(sigma) != m) throw std::logic_error("tuple_of_factor: round trip failed");
  return sigma;
}

AdmissibleTuple sigma_max(Int n, Int l, Prime p) {
  check_weyl_range(n, l);
  const Int target = n + 1;
  const int top_digit = static_cast<int>(p.value()) - 1;
  std::vector<Int> lambdas;
  Int mu = std::max(num_digits(target, p), num_digits(l, p));
  while (true) {
    std::optional<std::pair<Int, Int>> best;
    for (Int a = mu; a >= 1 && !best; --a) {
      if (digit(l, a, p) == top_digit) continue;
      for (Int b = a - 1; b >= 0; --b) {
        if (digit(l, b, p) == 0) continue;
        const Int x = apply_tuple(AdmissibleTuple({a, b}, l, p));
        if (window(x, 0, mu, p) <= window(target, 0, mu, p)) {
          best = std::pair{a, b};
          break;
        }
      }
    }
    if (!best) break;
    const auto [a, b] = *best;
    lambdas.push_back(a);
    lambdas.push_back(b);
    // Strictly below n' on every digit from β up to the current bound: the
    // remaining digits are unconstrained.
    const Int x = apply_tuple(AdmissibleTuple({a, b}, l, p));
    if (window(x, b, mu, p) < window(target, b, mu, p)) {
      append_maximal_tuple(l, b, p, lambdas);
      break;
    }
    mu = b - 1;
  }
  AdmissibleTuple result(std::move(lambdas), l, p);
#ifndef NDEBUG
  if (apply_tuple(result) != factors_lucas(n, l, p).back()) {
    throw std::logic_error("sigma_max disagrees with the largest factor index");
  }
#endif
  return result;
}

FactorPoset factor_poset(Int n, Int l, Prime p) {
  std::vector<Factor> factors;
  for (Int m : factors_lucas(n, l, p)) {
    auto sigma = tuple_of_factor(l, m, p);
    auto q = q_set(sigma);
    factors.push_back({m, std::move(sigma), std::move(q)});
  }
  return FactorPoset(n, l, p, std::move(factors));
}

bool is_irreducible(Int n, Int l, Prime p) {
  check_weyl_range(n, l);
  const Int np = n + 1;
  if (l == np) return true;
  const auto mk = digit_marks(n, l, p);
  if (mk.s >= mk.v) return true;
  const Int pm1 = p.value() - 1;
  if (digit(l, mk.v, p) + 1 != digit(np, mk.v, p)) return false;
  if (pm1 - digit(l, mk.s, p) < digit(np, mk.s, p)) return false;
  for (Int i = mk.s + 1; i < mk.v; ++i) {
    if (digit(l, i, p) != pm1 || digit(np, i, p) != 0) return false;
  }
  return true;
}

Int socle_factor(Int n, Int l, Prime p) {
  if (is_irreducible(n, l, p)) return l;
  const Int np = n + 1;
  const Int pm1 = p.value() - 1;
  const auto mk = digit_marks(n, l, p);
  const int lv = digit(l, mk.v, p);
  const int nv = digit(np, mk.v, p);
  const bool u_low = mk.u && *mk.u >= 0 && pm1 - digit(l, *mk.u, p) < digit(np, *mk.u, p);
  const bool u_high = mk.u && (*mk.u < 0 || pm1 - digit(l, *mk.u, p) > digit(np, *mk.u, p));

  std::optional<Int> t;
  if (mk.s < mk.v && (lv + 1 < nv || u_low)) {
    t = mk.v;
  } else if (lv + 1 == nv && u_high) {
    Int w = mk.v - 1;
    while (w > mk.s && digit(l, w, p) == pm1) --w;
    if (w > mk.s) t = w;
  }
  if (!t) {
    throw std::logic_error("socle_factor: no clause applies for n=" + std::to_string(n) +
                           ", l=" + std::to_string(l));
  }
  return apply_tuple(AdmissibleTuple({*t, mk.s}, l, p));
}

std::vector<std::vector<Int>> submodule_ideals(Int n, Int l, Prime p, std::size_t cap) {
  const auto poset = factor_poset(n, l, p);
  std::vector<std::vector<Int>> out;
  for (const auto& ideal : poset.order().order_ideals(cap)) {
    std::vector<Int> idx;
    for (auto a : ideal) idx.push_back(poset.factors()[a].index);
    out.push_back(std::move(idx));
  }
  return out;
}

PiMultiset composition_factors(Int n, Int l, Prime p) {
  if (n < 1) throw std::out_of_range("rank n must be >= 1");
  PiMultiset out;
  if (l < 1 || l > n + 1) return out;
  for (Int m : factors_lucas(n, l, p)) out.add({n, m});
  return out;
}

}  // namespace weyl
}  // namespace sympbranch
