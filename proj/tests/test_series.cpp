#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "pcovers/errors.hpp"
#include "pcovers/series/artin_schreier.hpp"
#include "support.hpp"

using namespace pcov;
using pcov::testing::Rng;

namespace {

LaurentSeries poly(Field f, long val, long prec, std::vector<int> c) {
  std::vector<Fq> out;
  for (int v : c) out.push_back(f.from_int(v));
  return LaurentSeries(f, val, prec, std::move(out));
}

// Coefficients of a series at exponents lo..hi as residues (prime fields).
std::vector<int> dense(const LaurentSeries& s, long lo, long hi) {
  std::vector<int> out;
  for (long i = lo; i <= hi; ++i) out.push_back(s.coeff(i).coeff(0));
  return out;
}

}  // namespace

TEST_CASE("normalization and zero-to-precision") {
  const Field f2 = Field::prime(2);
  const LaurentSeries z = LaurentSeries::zero(f2, 10);
  CHECK(z.is_zero());
  CHECK(z.valuation() == 11);
  const LaurentSeries s = poly(f2, -3, 5, {0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 1, 1});
  CHECK(s.valuation() == -1);
  CHECK(s.last_exponent() == 1);  // t^6, t^7, t^8 dropped past precision
  CHECK(s.terms().size() == 3);
  CHECK(s.precision() == 5);
  CHECK_THROWS_AS(s.coeff(6), UsageError);
}

TEST_CASE("precision propagation") {
  const Field f3 = Field::prime(3);
  const LaurentSeries f = poly(f3, -2, 10, {1, 2, 1});
  const LaurentSeries g = poly(f3, 1, 7, {1, 1});
  CHECK((f + g).precision() == 7);
  CHECK((f * g).precision() == std::min(-2 + 7, 1 + 10));
  CHECK(frobenius(f).precision() == 3 * 10 + 2);
  CHECK((f * t_power(f3, 3)).precision() == 13);
}

TEST_CASE("geometric series inverse over F_2") {
  const Field f2 = Field::prime(2);
  const LaurentSeries one_plus_t = poly(f2, 0, 20, {1, 1});
  const LaurentSeries inv = one_plus_t.inverse();
  CHECK(inv.precision() == 20);
  for (long i = 0; i <= 20; ++i) CHECK(inv.coeff(i).is_one());
  CHECK_THROWS_AS(poly(f2, 0, LaurentSeries::kExact, {1, 1}).inverse(), UsageError);
  CHECK(poly(f2, 0, LaurentSeries::kExact, {1, 1}).inverse(15).precision() == 15);
  CHECK_THROWS_AS(LaurentSeries::zero(f2, 5).inverse(), DomainError);
}

TEST_CASE("frobenius of t^-1 + 1 over F_2") {
  const Field f2 = Field::prime(2);
  const LaurentSeries s = poly(f2, -1, LaurentSeries::kExact, {1, 1});
  CHECK(frobenius(s) == poly(f2, -2, LaurentSeries::kExact, {1, 0, 1}));
}

TEST_CASE("f * f^-1 = 1 for random f") {
  Rng rng(11);
  for (Field f : {Field::prime(5), Field::extension(2, 3), Field::extension(3, 2)}) {
    for (int trial = 0; trial < 50; ++trial) {
      LaurentSeries s = pcov::testing::random_series(f, -3, 25, rng);
      if (s.is_zero()) continue;
      const LaurentSeries prod = s * s.inverse();
      CHECK(agrees(prod, LaurentSeries::constant(f.one())));
      CHECK(prod.precision() >= 25 - 2 * 3 - 3);
    }
  }
}

TEST_CASE("wp_apply examples") {
  const Field f2 = Field::prime(2);
  CHECK(wp_apply(LaurentSeries::zero(f2)).is_zero());
  CHECK(wp_apply(t_power(f2, 1)) == poly(f2, 1, LaurentSeries::kExact, {1, 1}));
  for (int p : {2, 3, 5, 7}) {
    const Field f = Field::prime(p);
    CHECK(wp_apply(t_power(f, -1)) == t_power(f, -p) - t_power(f, -1));
  }
}

TEST_CASE("wp_solve_tail examples") {
  const Field f2 = Field::prime(2);
  CHECK(wp_solve_tail(LaurentSeries::zero(f2, 30)).is_zero());

  const LaurentSeries b = wp_solve_tail(t_power(f2, 1, 20));
  // b^2 + b = t in characteristic 2: b = t + t^2 + t^4 + t^8 + t^16
  std::vector<int> expect(20, 0);
  for (long i : {1, 2, 4, 8, 16}) expect[static_cast<std::size_t>(i - 1)] = 1;
  CHECK(dense(b, 1, 20) == expect);
  CHECK(agrees(wp_apply(b), t_power(f2, 1, 20)));

  const Field f3 = Field::prime(3);
  const LaurentSeries b3 = wp_solve_tail(t_power(f3, 3, 30));
  for (long i = 1; i <= 30; ++i) CHECK(b3.coeff(i).coeff(0) == ((i == 3 || i == 9 || i == 27) ? 2 : 0));

  CHECK_THROWS_AS(wp_solve_tail(t_power(f2, 0, 10)), UsageError);
  CHECK_THROWS_AS(wp_solve_tail(t_power(f2, 1)), UsageError);
}

TEST_CASE("wp_solve_tail round trip on random tails") {
  Rng rng(2024);
  for (int p : {2, 3, 5}) {
    for (int e : {1, 2}) {
      const Field f = Field::extension(p, e);
      for (int trial = 0; trial < 40; ++trial) {
        const LaurentSeries l = pcov::testing::random_series(f, 1, 50, rng);
        const LaurentSeries b = wp_solve_tail(l);
        CHECK(b.precision() == 50);
        CHECK((b.is_zero() || b.valuation() >= 1));
        CHECK(agrees(wp_apply(b), l));
        CHECK(wp_apply(b).precision() == 50);
      }
    }
  }
}

TEST_CASE("wp_solve_tail perturbation only moves higher exponents") {
  Rng rng(7);
  const Field f = Field::extension(3, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const LaurentSeries l = pcov::testing::random_series(f, 1, 40, rng);
    const long i = 1 + static_cast<long>(rng() % 40);
    const LaurentSeries bump = LaurentSeries::monomial(pcov::testing::random_nonzero_fq(f, rng), i, 40);
    const LaurentSeries diff = wp_solve_tail(l + bump) - wp_solve_tail(l);
    REQUIRE_FALSE(diff.is_zero());
    CHECK(diff.valuation() == i);
  }
}

TEST_CASE("wp_solve_local examples") {
  for (int p : {2, 3, 5}) {
    const Field f = Field::prime(p);
    const LaurentSeries g = (t_power(f, -p) - t_power(f, -1)).truncated(10);
    const auto b = wp_solve_local(g);
    REQUIRE(b.has_value());
    CHECK(agrees(*b, t_power(f, -1)));
  }
  const Field f2 = Field::prime(2);
  CHECK_FALSE(wp_solve_local(t_power(f2, -1, 10)).has_value());
  CHECK_FALSE(wp_solve_local(LaurentSeries::constant(f2.one(), 10)).has_value());
  CHECK(wp_solve_local(LaurentSeries::zero(f2, 10))->is_zero());
  CHECK_THROWS_AS(wp_solve_local(t_power(f2, -4, -2)), UsageError);
}

TEST_CASE("wp_solve_local is sound on random inputs") {
  Rng rng(99);
  for (Field f : {Field::prime(2), Field::prime(3), Field::extension(2, 2), Field::extension(5, 2)}) {
    for (int trial = 0; trial < 60; ++trial) {
      // Half the inputs are images wp(c), so solvable cases are exercised.
      LaurentSeries g = pcov::testing::random_series(f, -6, 30, rng);
      if (trial % 2 == 0) g = wp_apply(pcov::testing::random_series(f, -3, 30, rng)).truncated(30);
      const auto b = wp_solve_local(g);
      if (trial % 2 == 0) REQUIRE(b.has_value());
      if (b) {
        CHECK(agrees(wp_apply(*b), g));
        CHECK(b->coeff(0).coeff(0) == 0);
      }
    }
  }
}

TEST_CASE("wp_solve_local absence agrees with exhaustive search over F_2, precision 6") {
  // Any solution of wp(b) = g with val(g) >= -4 has val(b) >= -2, and terms of
  // b past t^6 do not affect wp(b) modulo t^7, so candidates are exhaustive.
  const Field f2 = Field::prime(2);
  const long prec = 6;
  std::set<std::vector<int>> image;
  for (unsigned mask = 0; mask < (1u << 9); ++mask) {
    std::vector<int> c;
    for (int k = 0; k < 9; ++k) c.push_back(static_cast<int>((mask >> k) & 1u));
    const LaurentSeries b = poly(f2, -2, prec, c);
    image.insert(dense(wp_apply(b), -4, prec));
  }
  int solvable = 0;
  for (unsigned mask = 0; mask < (1u << 11); ++mask) {
    std::vector<int> c;
    for (int k = 0; k < 11; ++k) c.push_back(static_cast<int>((mask >> k) & 1u));
    const LaurentSeries g = poly(f2, -4, prec, c);
    const bool brute = image.count(dense(g, -4, prec)) > 0;
    const auto b = wp_solve_local(g);
    CHECK(b.has_value() == brute);
    solvable += brute ? 1 : 0;
  }
  // wp has kernel F_2 on the 2^9 candidates.
  CHECK(solvable == (1 << 8));
}

TEST_CASE("split_p1 examples") {
  const Field f2 = Field::prime(2);
  {
    const auto [b, h] = split_p1(t_power(f2, -2, 20));
    CHECK(b.is_zero());
    CHECK(h.series() == t_power(f2, -2));
  }
  {
    const auto [b, h] = split_p1(LaurentSeries::constant(f2.one(), 20));
    CHECK(b.is_zero());
    CHECK(h.series() == LaurentSeries::constant(f2.one()));
  }
  {
    const auto [b, h] = split_p1(t_power(f2, 1, 20));
    CHECK(h.series().is_zero());
    CHECK(b == wp_solve_tail(t_power(f2, 1, 20)));
  }
  CHECK_THROWS_AS(split_p1(t_power(f2, -3, -1)), UsageError);
}

TEST_CASE("split_p1 reconstruction, idempotence and additivity") {
  Rng rng(5);
  for (Field f : {Field::prime(3), Field::extension(2, 2), Field::prime(5)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const LaurentSeries u = pcov::testing::random_series(f, -8, 35, rng);
      const LaurentSeries v = pcov::testing::random_series(f, -5, 35, rng);
      const P1Split su = split_p1(u);
      CHECK(agrees(wp_apply(su.b) + su.h.series(), u));
      const P1Split again = split_p1(su.h.series().truncated(35));
      CHECK(again.b.is_zero());
      CHECK(again.h == su.h);
      const P1Split sv = split_p1(v);
      const P1Split sum = split_p1(u + v);
      CHECK(agrees(sum.b, su.b + sv.b));
      CHECK(sum.h.series() == su.h.series() + sv.h.series());
    }
  }
}

TEST_CASE("GlobalP1Element guards its invariant") {
  const Field f3 = Field::prime(3);
  CHECK_NOTHROW(GlobalP1Element(t_power(f3, -4)));
  CHECK_THROWS_AS(GlobalP1Element(t_power(f3, 1)), UsageError);
  CHECK_THROWS_AS(GlobalP1Element(t_power(f3, -1, 10)), UsageError);
  CHECK(GlobalP1Element(t_power(f3, -4)).pole_order() == 4);
}
