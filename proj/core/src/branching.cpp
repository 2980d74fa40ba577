#include "sympbranch/branching.hpp"

#include <stdexcept>
#include <string>

namespace sympbranch::branching {
namespace {

using padic::ipow;
using padic::lp;

void check_rank(Int n) {
  if (n < 2) throw std::out_of_range("branching needs rank n >= 2");
}

void check_pi_index(Int n, Int i) {
  check_rank(n);
  if (i < 1 || i > n + 1) {
    throw std::out_of_range("π-index " + std::to_string(i) + " outside [1, " +
                            std::to_string(n + 1) + "]");
  }
}

void check_omega_index(Int n, Int i, Int lo) {
  check_rank(n);
  if (i < lo || i > n) {
    throw std::out_of_range("ω-index " + std::to_string(i) + " outside [" + std::to_string(lo) +
                            ", " + std::to_string(n) + "]");
  }
}

// Shape parameters of D for π_i^n, 1 <= i <= n.
struct DShape {
  Int d = 0;
  int eps = 0;
  Int d_prime = 0;
  bool eps_term_nonzero = false;
};

// j_q = i-1+2p^q, the π-indices appearing in D.
Int j_index(Int i, Int q, Prime p) { return i - 1 + 2 * ipow(p.value(), q); }

DShape d_shape(Int n, Int i, Prime p) {
  const auto [d, eps] = eps_d(i, p);
  Int t = 0;
  while (j_index(i, t, p) <= n) ++t;
  DShape s;
  s.d = d;
  s.eps = eps;
  s.d_prime = std::min(d, t);
  s.eps_term_nonzero = eps == 1 && j_index(i, d, p) <= n;
  return s;
}

}  // namespace

EpsD eps_d(Int i, Prime p) {
  if (i < 1) throw std::invalid_argument("eps_d: index must be positive");
  const Int d = lp(i, p);
  const Int pd = ipow(p.value(), d);
  const Int mod = pd * p.value();
  const bool minus = (i + pd) % mod == 0;
  return {d, minus ? 0 : 1};
}

int b_coeff(Int t, Int i, Prime p) {
  if (i < 1) throw std::invalid_argument("b_coeff: index must be positive");
  if (t < 0) throw std::invalid_argument("b_coeff: negative t");
  const Int pt = ipow(p.value(), t);
  const Int pt1 = pt * p.value();
  if (i % pt1 == 0) return 2;
  if (i % pt != 0 || (i + pt) % pt1 == 0) return 0;
  return 1;
}

PiMultiset branch_pi(Int n, Int i, Prime p) {
  check_pi_index(n, i);
  const Int rank = n - 1;
  PiMultiset out;
  out.add({rank, i - 1});
  out.add({rank, i}, 2);
  // Terms with i-1+2p^t > n are zero at rank n-1.
  for (Int t = 0; i - 1 + 2 * ipow(p.value(), t) <= n; ++t) {
    out.add({rank, i - 1 + 2 * ipow(p.value(), t)}, b_coeff(t, i, p));
  }
  return out;
}

OmegaMultiset branch_omega(Int n, Int i, Prime p) {
  check_omega_index(n, i, 0);
  if (i == 0) {
    OmegaMultiset trivial;
    trivial.add({n - 1, 0});
    return trivial;
  }
  return to_omega(branch_pi(n, omega_to_pi({n, i}).m, p));
}

RestrictionStructure<PiLabel> restriction_structure_pi(Int n, Int i, Prime p) {
  check_rank(n);
  if (i < 1 || i > n) {
    throw std::out_of_range("π-index " + std::to_string(i) + " outside [1, " + std::to_string(n) +
                            "]");
  }
  const Int rank = n - 1;
  const auto shape = d_shape(n, i, p);

  RestrictionStructure<PiLabel> rs{{n, i}, {}, {}};
  rs.split.add({rank, i}, 2);

  std::vector<PiMultiset> lower;
  for (Int q = 0; q < shape.d_prime; ++q) {
    PiMultiset layer;
    layer.add({rank, j_index(i, q, p)});
    lower.push_back(std::move(layer));
  }
  PiMultiset middle;
  middle.add({rank, i - 1});
  if (shape.eps == 1) middle.add({rank, j_index(i, shape.d, p)});

  auto& layers = rs.d_part.layers;
  layers = lower;
  if (!middle.empty()) layers.push_back(std::move(middle));
  layers.insert(layers.end(), lower.rbegin(), lower.rend());
  return rs;
}

RestrictionStructure<OmegaLabel> restriction_structure(Int n, Int i, Prime p) {
  check_omega_index(n, i, 1);
  const auto pi = restriction_structure_pi(n, omega_to_pi({n, i}).m, p);
  RestrictionStructure<OmegaLabel> rs{{n, i}, to_omega(pi.split), {}};
  for (const auto& layer : pi.d_part.layers) rs.d_part.layers.push_back(to_omega(layer));
  return rs;
}

bool is_completely_reducible(Int n, Int i, Prime p) {
  check_omega_index(n, i, 0);
  return i == 0 || i == 1 || (n + 1 - i) % p.value() != 0;
}

Int d_submodule_count(Int n, Int i, Prime p) {
  check_omega_index(n, i, 1);
  const Int ip = omega_to_pi({n, i}).m;
  const auto shape = d_shape(n, ip, p);
  // Nonzero factors of the middle layer: π_{i-1} (zero when i = 1) and the ε-term.
  const int middle = (ip > 1 ? 1 : 0) + (shape.eps_term_nonzero ? 1 : 0);
  if (middle == 0) return 1;
  return middle == 2 ? 2 * shape.d + 4 : 2 * shape.d_prime + 2;
}

}  // namespace sympbranch::branching
