#include "sympbranch/padic.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace sympbranch {

namespace padic {

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace padic

Prime::Prime(Int p) : p_(p) {
  if (!padic::is_prime(p)) {
    throw std::invalid_argument("not a prime: " + std::to_string(p));
  }
}

PAdicDigits::PAdicDigits(std::vector<int> digits, Prime p) : digits_(std::move(digits)), p_(p) {
  for (int d : digits_) {
    if (d < 0 || d >= p.value()) {
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range for p=" +
                                  std::to_string(p.value()));
    }
  }
  while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
}

Int PAdicDigits::value() const {
  Int v = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    if (v > (std::numeric_limits<Int>::max() - *it) / p_.value()) {
      throw std::overflow_error("p-adic value does not fit in 64 bits");
    }
    v = v * p_.value() + *it;
  }
  return v;
}

namespace padic {

Int ipow(Int p, Int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Int r = 1;
  for (Int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<Int>::max() / p) throw std::overflow_error("ipow overflow");
    r *= p;
  }
  return r;
}

int digit(Int z, Int i, Prime p) {
  const Int b = p.value();
  for (Int j = 0; j < i && z > 0; ++j) z /= b;
  return static_cast<int>(z % b);
}

Int num_digits(Int z, Prime p) {
  Int n = 0;
  for (; z > 0; z /= p.value()) ++n;
  return n;
}

PAdicDigits to_digits(Int z, Prime p) {
  if (z < 0) throw std::invalid_argument("to_digits: negative input");
  std::vector<int> d;
  for (; z > 0; z /= p.value()) d.push_back(static_cast<int>(z % p.value()));
  return PAdicDigits(std::move(d), p);
}

Int lp(Int z, Prime p) {
  if (z <= 0) throw std::invalid_argument("lp: argument must be positive");
  Int e = 0;
  for (; z % p.value() == 0; z /= p.value()) ++e;
  return e;
}

bool contains(Int k, Int m, Prime p) {
  if (k < 0 || m < 0) throw std::invalid_argument("contains: negative input");
  const Int b = p.value();
  for (; k > 0; k /= b, m /= b) {
    const Int kd = k % b;
    if (kd != 0 && kd != m % b) return false;
  }
  return true;
}

int d_coeff(Int k, Int m, Prime p) { return contains(k, m, p) ? 1 : 0; }

int bar(int a, Prime p) {
  if (a < 0 || a >= p.value()) throw std::invalid_argument("bar: digit out of range");
  return static_cast<int>(p.value()) - 1 - a;
}

int binom_mod_p(Int m, Int k, Prime p) {
  if (k < 0 || k > m) throw std::invalid_argument("binom_mod_p: need 0 <= k <= m");
  const Int b = p.value();
  // Pascal's triangle mod p for digits 0 <= c <= r < p.
  std::vector<std::vector<int>> pascal(b, std::vector<int>(b, 0));
  for (Int r = 0; r < b; ++r) {
    pascal[r][0] = 1;
    for (Int c = 1; c <= r; ++c) pascal[r][c] = (pascal[r - 1][c - 1] + (c < r ? pascal[r - 1][c] : 0)) % b;
  }
  Int acc = 1;
  for (; m > 0 || k > 0; m /= b, k /= b) {
    const Int md = m % b, kd = k % b;
    if (kd > md) return 0;
    acc = acc * pascal[md][kd] % b;
  }
  return static_cast<int>(acc);
}

}  // namespace padic
}  // namespace sympbranch
