#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "sympbranch/padic.hpp"

using namespace sympbranch;

namespace {
const Int kPrimes[] = {2, 3, 5, 7};
}

TEST_CASE("Prime rejects composites and small values") {
  CHECK(Prime(2).value() == 2);
  CHECK(Prime(7919).value() == 7919);
  CHECK_THROWS_AS(Prime(0), std::invalid_argument);
  CHECK_THROWS_AS(Prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Prime(4), std::invalid_argument);
  CHECK_THROWS_AS(Prime(-3), std::invalid_argument);
  CHECK_THROWS_AS(Prime(91), std::invalid_argument);
}

TEST_CASE("to_digits") {
  const Prime p3(3);
  CHECK(padic::to_digits(0, p3).digits().empty());
  CHECK(padic::to_digits(11, p3).digits() == std::vector<int>{2, 0, 1});
  CHECK(padic::to_digits(12, Prime(2)).digits() == std::vector<int>{0, 0, 1, 1});
  CHECK_THROWS_AS(padic::to_digits(-1, p3), std::invalid_argument);

  const PAdicDigits m({0, 1, 2, 2, 0, 1, 0, 2, 1, 0, 0, 2, 1}, p3);
  CHECK(m.value() == 896988);
  CHECK(padic::to_digits(m.value(), p3) == m);
  CHECK(m[40] == 0);
}

TEST_CASE("PAdicDigits validates and trims") {
  const Prime p3(3);
  CHECK_THROWS_AS(PAdicDigits({0, 3}, p3), std::invalid_argument);
  CHECK_THROWS_AS(PAdicDigits({-1}, p3), std::invalid_argument);
  CHECK(PAdicDigits({1, 2, 0, 0}, p3).size() == 2);
  CHECK(PAdicDigits({0, 0}, p3).value() == 0);
}

TEST_CASE("digit round trip") {
  for (Int pv : kPrimes) {
    const Prime p(pv);
    for (Int z = 0; z <= 3000; ++z) {
      const auto d = padic::to_digits(z, p);
      REQUIRE(d.value() == z);
      REQUIRE(d.digits() == oracle::digits(z, pv));
      REQUIRE(static_cast<Int>(d.size()) == padic::num_digits(z, p));
      for (std::size_t i = 0; i < d.size() + 2; ++i) REQUIRE(padic::digit(z, static_cast<Int>(i), p) == d[i]);
    }
  }
}

TEST_CASE("lp") {
  CHECK(padic::lp(12, Prime(2)) == 2);
  CHECK(padic::lp(18, Prime(3)) == 2);
  for (Int pv : kPrimes) CHECK(padic::lp(1, Prime(pv)) == 0);
  CHECK(padic::lp(5 * 5 * 5 * 7, Prime(5)) == 3);
  CHECK_THROWS_AS(padic::lp(0, Prime(2)), std::invalid_argument);
  CHECK_THROWS_AS(padic::lp(-4, Prime(2)), std::invalid_argument);
}

TEST_CASE("contains and d_coeff") {
  const Prime p3(3), p2(2);
  const Int m = PAdicDigits({0, 1, 2, 2, 0, 1, 0, 2, 1, 0, 0, 2, 1}, p3).value();
  const Int k = PAdicDigits({0, 0, 2, 2, 0, 0, 0, 2, 1}, p3).value();
  CHECK(k == 11007);
  CHECK(padic::contains(k, m, p3));
  CHECK(padic::contains(0, m, p3));
  CHECK_FALSE(padic::contains(3, 6, p2));
  CHECK(padic::d_coeff(3, 6, p2) == 0);
  CHECK(padic::d_coeff(2, 6, p2) == 1);
  CHECK(padic::d_coeff(0, 0, p3) == 1);

  for (Int pv : kPrimes)
    for (Int mm = 0; mm <= 400; ++mm)
      for (Int kk = 0; kk <= mm; ++kk) REQUIRE(padic::contains(kk, mm, Prime(pv)) == oracle::subdigit(kk, mm, pv));
}

TEST_CASE("bar is a digit involution") {
  CHECK(padic::bar(0, Prime(3)) == 2);
  CHECK(padic::bar(1, Prime(2)) == 0);
  CHECK(padic::bar(1, Prime(3)) == 1);
  for (Int pv : kPrimes)
    for (int a = 0; a < pv; ++a) CHECK(padic::bar(padic::bar(a, Prime(pv)), Prime(pv)) == a);
  CHECK_THROWS_AS(padic::bar(3, Prime(3)), std::invalid_argument);
  CHECK_THROWS_AS(padic::bar(-1, Prime(3)), std::invalid_argument);
}

TEST_CASE("binom_mod_p examples") {
  CHECK(padic::binom_mod_p(6, 2, Prime(2)) == 1);
  CHECK(padic::binom_mod_p(6, 3, Prime(2)) == 0);
  CHECK(padic::binom_mod_p(17, 0, Prime(5)) == 1);
  CHECK(padic::binom_mod_p(2, 1, Prime(3)) == 2);
  CHECK_THROWS_AS(padic::binom_mod_p(3, 4, Prime(2)), std::invalid_argument);
}

TEST_CASE("binom_mod_p agrees with exact binomials") {
  const auto rows = oracle::pascal(200);
  for (Int pv : kPrimes)
    for (Int m = 0; m <= 200; ++m)
      for (Int k = 0; k <= m; ++k) {
        const oracle::Big expected = rows[m][k] % pv;
        REQUIRE(padic::binom_mod_p(m, k, Prime(pv)) == expected.convert_to<int>());
      }
}

// The subdigit relation implies a nonzero binomial for every p; the two
// coincide only in characteristic 2, where every digit is 0 or 1.
TEST_CASE("subdigit relation versus Lucas nonvanishing") {
  for (Int pv : kPrimes) {
    const Prime p(pv);
    Int gaps = 0;
    for (Int m = 0; m <= 2000; ++m)
      for (Int k = 0; k <= m; ++k) {
        const bool c = padic::contains(k, m, p);
        const bool nz = padic::binom_mod_p(m, k, p) != 0;
        REQUIRE(nz == oracle::digitwise_leq(k, m, pv));
        if (c) REQUIRE(nz);
        if (c != nz) ++gaps;
      }
    if (pv == 2) CHECK(gaps == 0);
    else CHECK(gaps > 0);
  }
  CHECK_FALSE(padic::contains(1, 2, Prime(3)));
  CHECK(padic::binom_mod_p(2, 1, Prime(3)) != 0);
}

TEST_CASE("ipow overflow") {
  CHECK(padic::ipow(3, 0) == 1);
  CHECK(padic::ipow(2, 62) == (Int{1} << 62));
  CHECK_THROWS_AS(padic::ipow(2, 63), std::overflow_error);
  CHECK_THROWS_AS(padic::ipow(7, 40), std::overflow_error);
}
