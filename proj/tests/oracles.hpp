#pragma once

// Reference implementations used only by the tests. None of these call into
// the library's digit or branching code, so agreement is meaningful.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Big = boost::multiprecision::cpp_int;

inline std::vector<int> digits(Int z, Int p) {
  std::vector<int> out;
  for (; z > 0; z /= p) out.push_back(static_cast<int>(z % p));
  return out;
}

inline int digit_at(const std::vector<int>& d, std::size_t i) { return i < d.size() ? d[i] : 0; }

// Rows 0..n of Pascal's triangle, exact.
inline std::vector<std::vector<Big>> pascal(Int n) {
  std::vector<std::vector<Big>> rows{{1}};
  for (Int m = 1; m <= n; ++m) {
    const auto& prev = rows.back();
    std::vector<Big> row(prev.size() + 1);
    row.front() = row.back() = 1;
    for (std::size_t k = 1; k < prev.size(); ++k) row[k] = prev[k - 1] + prev[k];
    rows.push_back(std::move(row));
  }
  return rows;
}

// Digitwise: every nonzero digit of k equals the digit of m at that place.
inline bool subdigit(Int k, Int m, Int p) {
  const auto dk = digits(k, p), dm = digits(m, p);
  for (std::size_t i = 0; i < dk.size(); ++i)
    if (dk[i] != 0 && dk[i] != digit_at(dm, i)) return false;
  return true;
}

inline bool digitwise_leq(Int k, Int m, Int p) {
  const auto dk = digits(k, p), dm = digits(m, p);
  for (std::size_t i = 0; i < dk.size(); ++i)
    if (dk[i] > digit_at(dm, i)) return false;
  return true;
}

// Weyl's dimension formula for the C_n weight e_1 + ... + e_i, taken over the
// positive roots e_a - e_b, e_a + e_b (a < b) and 2e_a with ρ = (n, ..., 1).
inline Big classical_dim(Int n, Int i) {
  std::vector<Int> rho(n), x(n);
  for (Int a = 0; a < n; ++a) {
    rho[a] = n - a;
    x[a] = rho[a] + (a < i ? 1 : 0);
  }
  Big num = 1, den = 1;
  for (Int a = 0; a < n; ++a) {
    num *= 2 * x[a];
    den *= 2 * rho[a];
    for (Int b = a + 1; b < n; ++b) {
      num *= Big(x[a] - x[b]) * (x[a] + x[b]);
      den *= Big(rho[a] - rho[b]) * (rho[a] + rho[b]);
    }
  }
  return num / den;
}

// ω-form restriction rule, transcribed directly: for 0 <= i <= n, with
// d = lp(n-i+1) and ε = 0 iff n-i+1 ≡ -p^d mod p^{d+1},
// ω_i↓ = ω_i + 2ω_{i-1} + Σ_{t<d} 2ω_{i-2p^t} + ε ω_{i-2p^d}, all at rank n-1,
// with indices outside [0, n-1] dropped. Keys are ω-indices.
inline std::map<Int, Int> restriction_omega(Int n, Int i, Int p) {
  std::map<Int, Int> out;
  auto add = [&](Int j, Int c) {
    if (c > 0 && j >= 0 && j <= n - 1) out[j] += c;
  };
  const Int z = n - i + 1;
  Int d = 0, pd = 1;
  while (z % (pd * p) == 0) {
    ++d;
    pd *= p;
  }
  const bool eps = ((z + pd) % (pd * p)) != 0;
  add(i, 1);
  add(i - 1, 2);
  Int pt = 1;
  for (Int t = 0; t < d; ++t, pt *= p) add(i - 2 * pt, 2);
  add(i - 2 * pd, eps ? 1 : 0);
  return out;
}

// Definition of an l-admissible reflection: write l = a p^λ - k with
// 0 <= k < p^λ; admissible iff k != 0 and p does not divide a.
inline bool reflection_admissible_def(Int lambda, Int l, Int p) {
  Int pl = 1;
  for (Int e = 0; e < lambda; ++e) pl *= p;
  const Int k = (pl - l % pl) % pl;
  const Int a = (l + k) / pl;
  return k != 0 && a % p != 0;
}

// Down-closed subsets of a relation on {0..size-1} by trying every subset.
template <class Leq>
std::size_t count_ideals_brute(std::size_t size, Leq&& leq) {
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    bool closed = true;
    for (std::size_t b = 0; b < size && closed; ++b) {
      if (!(mask >> b & 1)) continue;
      for (std::size_t a = 0; a < size; ++a)
        if (a != b && leq(a, b) && !(mask >> a & 1)) {
          closed = false;
          break;
        }
    }
    count += closed;
  }
  return count;
}

inline Int first_prime_above(Int x) {
  for (Int c = x + 1;; ++c) {
    bool prime = c >= 2;
    for (Int q = 2; q * q <= c && prime; ++q) prime = c % q != 0;
    if (prime) return c;
  }
}

}  // namespace oracle
