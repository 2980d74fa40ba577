#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace sympbranch {

using Int = std::int64_t;

/// A prime characteristic. Construction rejects anything that is not prime.
class Prime {
 public:
  explicit Prime(Int p);

  Int value() const noexcept { return p_; }
  auto operator<=>(const Prime&) const = default;

 private:
  Int p_;
};

/// Little-endian base-p digits of a nonnegative integer.
///
/// Canonical: no trailing zero digit, so zero is the empty sequence and
/// equality is structural. Reading past the end yields 0.
class PAdicDigits {
 public:
  PAdicDigits(std::vector<int> digits, Prime p);

  const std::vector<int>& digits() const noexcept { return digits_; }
  Prime prime() const noexcept { return p_; }
  std::size_t size() const noexcept { return digits_.size(); }
  int operator[](std::size_t i) const noexcept { return i < digits_.size() ? digits_[i] : 0; }
  Int value() const;

  bool operator==(const PAdicDigits&) const = default;

 private:
  std::vector<int> digits_;
  Prime p_;
};

namespace padic {

/// p^e; throws std::overflow_error if it does not fit in Int.
Int ipow(Int p, Int e);

/// Digit i of z in base p (0 when p^i > z).
int digit(Int z, Int i, Prime p);

/// Number of base-p digits of z (0 for z = 0).
Int num_digits(Int z, Prime p);

PAdicDigits to_digits(Int z, Prime p);

/// Largest e with p^e | z. z must be positive.
Int lp(Int z, Prime p);

/// k ⊂_p m: every nonzero digit of k equals the matching digit of m.
bool contains(Int k, Int m, Prime p);

int d_coeff(Int k, Int m, Prime p);

/// Digit complement p-1-a.
int bar(int a, Prime p);

/// C(m, k) mod p via Lucas' theorem, as a product of digitwise binomials.
int binom_mod_p(Int m, Int k, Prime p);

bool is_prime(Int p);

}  // namespace padic
}  // namespace sympbranch
