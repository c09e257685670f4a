#pragma once

#include <optional>

#include "pcovers/series/laurent.hpp"

namespace pcov {

/// Element of k[t^{-1}], the ring of regular functions on P^1 minus the
/// point t = 0. Always exact.
class GlobalP1Element {
 public:
  /// Throws UsageError unless s is exact with no positive exponents.
  explicit GlobalP1Element(LaurentSeries s);

  static bool is_global(const LaurentSeries& s);

  const LaurentSeries& series() const noexcept { return s_; }
  long pole_order() const noexcept { return s_.is_zero() ? 0 : -s_.valuation(); }

  friend bool operator==(const GlobalP1Element& a, const GlobalP1Element& b) { return a.s_ == b.s_; }

 private:
  LaurentSeries s_;
};

/// The Artin-Schreier map f -> f^p - f.
LaurentSeries wp_apply(const LaurentSeries& f);

/// Unique b in t k[[t]] with wp(b) = l, for l in t k[[t]]:
///   b_i = -a_i for p not dividing i, b_{np} = b_n^p - a_{np}.
/// The output keeps the input precision. Throws UsageError if l has a term
/// of exponent <= 0, or if l is an exact nonzero series (its preimage is
/// infinite).
LaurentSeries wp_solve_tail(const LaurentSeries& l);

/// Some b in F_q((t)) with wp(b) = g to precision, if one exists.
///
/// Poles are peeled from the most negative exponent: a term c t^{-m} with
/// p | m is cancelled by wp(c^{1/p} t^{-m/p}); with p not dividing m there
/// is no solution. The constant is solved in F_q and the tail by
/// wp_solve_tail. Solutions form b + F_p; the returned one has the
/// lexicographically least constant term. Requires precision >= 0.
std::optional<LaurentSeries> wp_solve_local(const LaurentSeries& g);

struct P1Split {
  LaurentSeries b;   // in t k[[t]]
  GlobalP1Element h; // in k[t^{-1}], constants included
};

/// f = wp(b) + h with b in t k[[t]] and h in k[t^{-1}]; unique.
/// Requires precision >= 0.
P1Split split_p1(const LaurentSeries& f);

}  // namespace pcov
