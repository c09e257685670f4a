#pragma once

// Random generators shared by the unit and acceptance suites.

#include <random>
#include <vector>

#include "pcovers/arith/field.hpp"
#include "pcovers/series/laurent.hpp"

namespace pcov::testing {

using Rng = std::mt19937_64;

inline Fq random_fq(Field f, Rng& rng) {
  std::vector<int> c(static_cast<std::size_t>(f.degree()));
  for (int& v : c) v = static_cast<int>(rng() % static_cast<std::uint64_t>(f.characteristic()));
  return f.from_coeffs(c);
}

inline Fq random_nonzero_fq(Field f, Rng& rng) {
  for (;;) {
    Fq a = random_fq(f, rng);
    if (!a.is_zero()) return a;
  }
}

/// Dense random series with terms at exponents lo..prec.
inline LaurentSeries random_series(Field f, long lo, long prec, Rng& rng) {
  std::vector<Fq> c;
  for (long i = lo; i <= prec; ++i) c.push_back(random_fq(f, rng));
  return LaurentSeries(f, lo, prec, std::move(c));
}

/// Random exact polynomial in t^{-1} with pole order at most max_pole.
inline LaurentSeries random_p1_global(Field f, long max_pole, Rng& rng) {
  std::vector<Fq> c;
  for (long i = -max_pole; i <= 0; ++i) c.push_back(random_fq(f, rng));
  return LaurentSeries(f, -max_pole, LaurentSeries::kExact, std::move(c));
}

}  // namespace pcov::testing
