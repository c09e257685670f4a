#pragma once

#include <vector>

#include "pcovers/arith/field.hpp"

namespace pcov {

/// Truncated Laurent series over F_q, an element of F_q((t)) known modulo
/// t^{prec+1}.
///
/// Storage is sparse at both ends: `terms()` holds the coefficients of
/// t^val, t^{val+1}, ... with a nonzero first and last entry; every exponent
/// past the last stored one and up to `precision()` is zero. A series whose
/// precision is `kExact` is exact (a Laurent polynomial). The zero-to-precision
/// series has no terms and valuation prec + 1 (kExact for the exact zero).
///
/// Precision propagates conservatively:
///   prec(f +- g) = min(prec f, prec g)
///   prec(f * g)  = min(val f + prec g, val g + prec f)
///   prec(f^p)    = p * prec f + p - 1
class LaurentSeries {
 public:
  static constexpr long kExact = 1L << 40;

  /// Dense constructor: coeffs[k] is the coefficient of t^{val+k}. Terms
  /// past `prec` are dropped; the result is normalized.
  LaurentSeries(Field f, long val, long prec, std::vector<Fq> coeffs);

  static LaurentSeries zero(Field f, long prec = kExact);
  static LaurentSeries constant(const Fq& c, long prec = kExact);
  static LaurentSeries monomial(const Fq& c, long exponent, long prec = kExact);

  Field field() const noexcept { return field_; }
  long valuation() const noexcept { return val_; }
  long precision() const noexcept { return prec_; }
  bool is_exact() const noexcept { return prec_ >= kExact; }
  /// Zero to the known precision.
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest exponent with a stored (nonzero) coefficient; val - 1 when zero.
  long last_exponent() const noexcept { return val_ + static_cast<long>(terms_.size()) - 1; }
  const std::vector<Fq>& terms() const noexcept { return terms_; }

  /// Coefficient of t^i; throws UsageError when i exceeds the precision.
  Fq coeff(long i) const;

  /// Forget everything past t^prec (no-op if already coarser).
  LaurentSeries truncated(long prec) const;

  /// Terms with exponent in [lo, hi]. Exact when hi <= precision, otherwise
  /// the precision is kept.
  LaurentSeries slice(long lo, long hi) const;

  /// Exponents >= 1.
  LaurentSeries positive_part() const { return slice(1, kExact); }
  /// Exponents <= 0; exact when the precision is >= 0.
  LaurentSeries nonpositive_part() const { return slice(-kExact, 0); }
  /// Exponents < 0.
  LaurentSeries principal_part() const { return slice(-kExact, -1); }

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const Fq& c, const LaurentSeries& a);
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  /// Multiplicative inverse. An exact series that is not a monomial has an
  /// infinite inverse; `target_prec` then bounds the result (UsageError if
  /// omitted). Throws DomainError for the zero-to-precision series.
  LaurentSeries inverse(long target_prec = kExact) const;

  /// Structural equality (same precision and same terms).
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

 private:
  void normalize();

  Field field_;
  long val_;
  long prec_;
  std::vector<Fq> terms_;
};

/// sum a_i t^i -> sum a_i^p t^{ip}.
LaurentSeries frobenius(const LaurentSeries& f);

/// Equality up to the coarser of the two precisions.
bool agrees(const LaurentSeries& a, const LaurentSeries& b);

/// t^k over f.
LaurentSeries t_power(Field f, long k, long prec = LaurentSeries::kExact);

}  // namespace pcov
