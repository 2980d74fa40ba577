#include <doctest.h>

#include <stdexcept>

#include "sympbranch/labels.hpp"

using namespace sympbranch;

TEST_CASE("omega/pi conversion") {
  CHECK(omega_to_pi({2, 0}) == PiLabel{2, 3});
  CHECK(omega_to_pi({3, 2}) == PiLabel{3, 2});
  CHECK(omega_to_pi({3, 5}).is_zero());
  CHECK(omega_to_pi({3, -1}).is_zero());
  for (Int n = 1; n <= 8; ++n)
    for (Int i = -2; i <= n + 2; ++i) {
      const OmegaLabel w{n, i};
      CHECK(pi_to_omega(omega_to_pi(w)) == w);
      CHECK(omega_to_pi(w).is_zero() == w.is_zero());
      CHECK(omega_to_pi(w).is_trivial() == w.is_trivial());
    }
}

TEST_CASE("label predicates") {
  CHECK(OmegaLabel{4, 0}.is_trivial());
  CHECK_FALSE(OmegaLabel{4, 4}.is_zero());
  CHECK(OmegaLabel{4, 5}.is_zero());
  CHECK(PiLabel{4, 5}.is_trivial());
  CHECK(PiLabel{4, 0}.is_zero());
  CHECK(PiLabel{4, 6}.is_zero());
}

TEST_CASE("multisets drop zero labels") {
  OmegaMultiset ms;
  ms.add({3, 1}, 2);
  ms.add({3, 4});
  ms.add({3, -1}, 5);
  ms.add({3, 2}, 0);
  CHECK(ms.distinct() == 1);
  CHECK(ms.total() == 2);
  CHECK(ms.multiplicity({3, 1}) == 2);
  CHECK(ms.multiplicity({3, 4}) == 0);
  CHECK_THROWS_AS(ms.add({3, 1}, -1), std::invalid_argument);

  OmegaMultiset other;
  other.add({3, 1});
  other.add({3, 0}, 3);
  ms.merge(other, 2);
  CHECK(ms.multiplicity({3, 1}) == 4);
  CHECK(ms.multiplicity({3, 0}) == 6);
  CHECK(ms.total() == 10);
}

TEST_CASE("multiset coordinate change round trips") {
  OmegaMultiset ms;
  ms.add({5, 0});
  ms.add({5, 2}, 2);
  ms.add({5, 5});
  const auto pi = to_pi(ms);
  CHECK(pi.multiplicity({5, 6}) == 1);
  CHECK(pi.multiplicity({5, 4}) == 2);
  CHECK(pi.multiplicity({5, 1}) == 1);
  CHECK(to_omega(pi) == ms);
  CHECK(OmegaMultiset{} == to_omega(PiMultiset{}));
}
