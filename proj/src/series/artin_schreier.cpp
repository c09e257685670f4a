#include "pcovers/series/artin_schreier.hpp"

#include <string>
#include <utility>
#include <vector>

#include "pcovers/errors.hpp"

namespace pcov {

GlobalP1Element::GlobalP1Element(LaurentSeries s) : s_(std::move(s)) {
  if (!is_global(s_)) throw UsageError("not an element of k[t^-1]: series must be exact with no positive exponents");
}

bool GlobalP1Element::is_global(const LaurentSeries& s) {
  return s.is_exact() && (s.is_zero() || s.last_exponent() <= 0);
}

LaurentSeries wp_apply(const LaurentSeries& f) { return frobenius(f) - f; }

LaurentSeries wp_solve_tail(const LaurentSeries& l) {
  if (!l.is_zero() && l.valuation() < 1)
    throw UsageError("wp_solve_tail needs a series in t k[[t]], got valuation " + std::to_string(l.valuation()));
  if (l.is_exact()) {
    if (l.is_zero()) return l;
    throw UsageError("wp_solve_tail needs a finite precision for a nonzero input");
  }
  const Field f = l.field();
  const long p = f.characteristic();
  const long n = l.precision();
  if (n < 1) return LaurentSeries::zero(f, n);
  // b[i] for i = 1..n; index 0 unused.
  std::vector<Fq> b(static_cast<std::size_t>(n + 1), f.zero());
  for (long i = 1; i <= n; ++i) {
    const Fq a = l.coeff(i);
    if (i % p != 0) {
      b[static_cast<std::size_t>(i)] = -a;
    } else {
      b[static_cast<std::size_t>(i)] = frobenius(b[static_cast<std::size_t>(i / p)]) - a;
    }
  }
  return LaurentSeries(f, 0, n, std::move(b));
}

std::optional<LaurentSeries> wp_solve_local(const LaurentSeries& g) {
  if (g.precision() < 0) throw UsageError("wp_solve_local needs precision >= 0");
  const Field f = g.field();
  const long p = f.characteristic();
  LaurentSeries work = g;
  LaurentSeries b = LaurentSeries::zero(f);
  while (!work.is_zero() && work.valuation() < 0) {
    const long m = -work.valuation();
    if (m % p != 0) return std::nullopt;
    const LaurentSeries step = LaurentSeries::monomial(pth_root(work.coeff(-m)), -m / p);
    b += step;
    work -= wp_apply(step);
  }
  const auto c = artin_schreier_solve(work.coeff(0));
  if (!c) return std::nullopt;
  b += LaurentSeries::constant(*c);
  b += wp_solve_tail(work.positive_part());
  return b.truncated(g.precision());
}

P1Split split_p1(const LaurentSeries& f) {
  if (f.precision() < 0) throw UsageError("split_p1 needs precision >= 0");
  return P1Split{wp_solve_tail(f.positive_part()), GlobalP1Element(f.nonpositive_part())};
}

}  // namespace pcov
