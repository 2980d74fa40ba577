#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "sympbranch/branching.hpp"
#include "sympbranch/weyl.hpp"

using namespace sympbranch;

namespace {

const Int kPrimes[] = {2, 3, 5, 7};

PiMultiset pis(Int n, std::initializer_list<std::pair<Int, Int>> entries) {
  PiMultiset ms;
  for (auto [m, c] : entries) ms.add({n, m}, c);
  return ms;
}

OmegaMultiset omegas(Int n, std::initializer_list<std::pair<Int, Int>> entries) {
  OmegaMultiset ms;
  for (auto [i, c] : entries) ms.add({n, i}, c);
  return ms;
}

}  // namespace

TEST_CASE("eps_d and b_coeff") {
  CHECK(branching::eps_d(2, Prime(2)) == branching::EpsD{1, 0});
  CHECK(branching::eps_d(1, Prime(3)) == branching::EpsD{0, 1});
  CHECK(branching::eps_d(3, Prime(3)) == branching::EpsD{1, 1});
  CHECK_THROWS_AS(branching::eps_d(0, Prime(3)), std::invalid_argument);

  CHECK(branching::b_coeff(0, 2, Prime(2)) == 2);
  CHECK(branching::b_coeff(1, 2, Prime(2)) == 0);
  CHECK(branching::b_coeff(1, 3, Prime(3)) == 1);
  CHECK(branching::b_coeff(0, 5, Prime(3)) == 0);  // 5 ≡ -1 mod 3
  CHECK(branching::b_coeff(4, 3, Prime(3)) == 0);
}

TEST_CASE("branch_pi examples") {
  CHECK(branching::branch_pi(3, 2, Prime(2)) == pis(2, {{1, 1}, {2, 2}, {3, 2}}));
  CHECK(branching::branch_pi(9, 3, Prime(3)) == pis(8, {{2, 1}, {3, 2}, {4, 2}, {8, 1}}));
  CHECK(branching::branch_pi(4, 3, Prime(5)) == pis(3, {{2, 1}, {3, 2}, {4, 1}}));
  CHECK_THROWS_AS(branching::branch_pi(1, 1, Prime(2)), std::out_of_range);
  CHECK_THROWS_AS(branching::branch_pi(4, 6, Prime(2)), std::out_of_range);
  CHECK_THROWS_AS(branching::branch_pi(4, 0, Prime(2)), std::out_of_range);
}

TEST_CASE("branch_omega examples") {
  CHECK(branching::branch_omega(2, 2, Prime(2)) == omegas(1, {{1, 2}}));
  CHECK(branching::branch_omega(3, 2, Prime(2)) == omegas(2, {{2, 1}, {1, 2}, {0, 2}}));
  for (Int n = 2; n <= 6; ++n) CHECK(branching::branch_omega(n, 0, Prime(3)) == omegas(n - 1, {{0, 1}}));
  CHECK_THROWS_AS(branching::branch_omega(3, 4, Prime(2)), std::out_of_range);
  CHECK_THROWS_AS(branching::branch_omega(3, -1, Prime(2)), std::out_of_range);
}

TEST_CASE("branch_omega matches the ω-form rule") {
  for (Int pv : kPrimes)
    for (Int n = 2; n <= 60; ++n)
      for (Int i = 0; i <= n; ++i) {
        OmegaMultiset expected;
        for (auto [j, c] : oracle::restriction_omega(n, i, pv)) expected.add({n - 1, j}, c);
        const auto got = branching::branch_omega(n, i, Prime(pv));
        REQUIRE(got == expected);
        for (const auto& [label, mult] : got) REQUIRE(mult <= 2);
      }
}

TEST_CASE("classical limit") {
  for (Int n = 2; n <= 20; ++n) {
    const Prime p(oracle::first_prime_above(n + 1));
    for (Int i = 0; i <= n; ++i)
      REQUIRE(branching::branch_omega(n, i, p) == omegas(n - 1, {{i, 1}, {i - 1, 2}, {i - 2, 1}}));
  }
}

TEST_CASE("restriction structure examples") {
  const auto a = branching::restriction_structure(3, 2, Prime(2));
  CHECK(a.split == omegas(2, {{1, 2}}));
  REQUIRE(a.d_part.length() == 3);
  CHECK(a.d_part.layers[0] == omegas(2, {{0, 1}}));
  CHECK(a.d_part.layers[1] == omegas(2, {{2, 1}}));
  CHECK(a.d_part.layers[2] == omegas(2, {{0, 1}}));

  const auto b = branching::restriction_structure(2, 2, Prime(2));
  CHECK(b.split == omegas(1, {{1, 2}}));
  CHECK(b.d_part.empty());

  const auto c = branching::restriction_structure_pi(9, 3, Prime(3));
  REQUIRE(c.d_part.length() == 3);
  CHECK(c.d_part.layers[0] == pis(8, {{4, 1}}));
  CHECK(c.d_part.layers[1] == pis(8, {{2, 1}, {8, 1}}));
  CHECK(c.d_part.layers[2] == pis(8, {{4, 1}}));
  CHECK(c.split == pis(8, {{3, 2}}));

  CHECK_THROWS_AS(branching::restriction_structure(3, 0, Prime(2)), std::out_of_range);
  CHECK_THROWS_AS(branching::restriction_structure_pi(3, 4, Prime(2)), std::out_of_range);
}

TEST_CASE("restriction structure is consistent with the composition factors") {
  for (Int pv : kPrimes) {
    const Prime p(pv);
    for (Int n = 2; n <= 40; ++n)
      for (Int i = 1; i <= n; ++i) {
        const auto rs = branching::restriction_structure(n, i, p);
        REQUIRE(rs.flatten() == branching::branch_omega(n, i, p));
        REQUIRE(rs.d_part.is_palindromic());
        for (const auto& layer : rs.d_part.layers) REQUIRE_FALSE(layer.empty());
        REQUIRE(branching::is_completely_reducible(n, i, p) == (rs.d_part.length() <= 1));
        REQUIRE(branching::is_completely_reducible(n, i, p) == (i == 1 || (n + 1 - i) % pv != 0));

        // Middle layer: ω_i ⊕ ε ω_{i-2p^d} with d, ε read off n+1-i.
        if (!rs.d_part.empty()) {
          const auto ed = branching::eps_d(n + 1 - i, p);
          OmegaMultiset middle;
          middle.add({n - 1, i});
          middle.add({n - 1, i - 2 * padic::ipow(pv, ed.d)}, ed.eps);
          REQUIRE(rs.d_part.layers[rs.d_part.length() / 2] == middle);
        }
      }
  }
}

TEST_CASE("complete reducibility examples") {
  for (Int n = 2; n <= 8; ++n) {
    CHECK(branching::is_completely_reducible(n, 0, Prime(2)));
    CHECK(branching::is_completely_reducible(n, 1, Prime(2)));
  }
  CHECK_FALSE(branching::is_completely_reducible(3, 2, Prime(2)));
  CHECK(branching::is_completely_reducible(4, 2, Prime(5)));
  CHECK_THROWS_AS(branching::is_completely_reducible(4, 5, Prime(5)), std::out_of_range);
}

TEST_CASE("submodules of D") {
  CHECK(branching::d_submodule_count(3, 2, Prime(2)) == 4);
  CHECK(branching::d_submodule_count(9, 7, Prime(3)) == 6);
  // D = ω_2 ⊕ ω_0 here: semisimple with two summands, so four submodules.
  CHECK(branching::d_submodule_count(4, 2, Prime(5)) == 4);
  CHECK(branching::d_submodule_count(2, 2, Prime(2)) == 1);
  CHECK(branching::d_submodule_count(5, 5, Prime(3)) == 2);

  for (Int pv : kPrimes) {
    const Prime p(pv);
    for (Int n = 2; n <= 40; ++n)
      for (Int i = 1; i <= n; ++i) {
        const auto rs = branching::restriction_structure(n, i, p);
        const auto poset = layer_poset(rs.d_part);
        if (poset.size() > 16) continue;
        const auto brute =
            oracle::count_ideals_brute(poset.size(), [&](std::size_t a, std::size_t b) { return poset.leq(a, b); });
        REQUIRE(branching::d_submodule_count(n, i, p) == static_cast<Int>(brute));
      }
  }
}
