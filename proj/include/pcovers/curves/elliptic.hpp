#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pcovers/arith/field.hpp"
#include "pcovers/series/laurent.hpp"

namespace pcov {

/// y^2 = x^3 + A x + B over F_p, p >= 5, marked at the point at infinity O
/// with local parameter t = -x/y.
class EllipticCurve {
 public:
  /// Throws DomainError for p < 5, p not prime, or a singular curve.
  EllipticCurve(int p, int a, int b);

  int p() const noexcept { return p_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  Field field() const { return Field::prime(p_); }

  /// 4A^3 + 27B^2 mod p is nonzero.
  static bool is_nonsingular(int p, int a, int b);

  friend bool operator==(const EllipticCurve& l, const EllipticCurve& r) noexcept {
    return l.p_ == r.p_ && l.a_ == r.a_ && l.b_ == r.b_;
  }

 private:
  int p_;
  int a_;
  int b_;
};

struct WeierstrassExpansion {
  LaurentSeries x;  // t^-2 + ...
  LaurentSeries y;  // -t^-3 + ...
};

/// x(t) and y(t), both known to precision `prec` (prec >= 6).
///
/// With z = t and w = -1/y, the relation w = z^3 + A z w^2 + B w^3 is
/// iterated to a fixed point; then x = z/w and y = -1/w.
WeierstrassExpansion weierstrass_expand(const EllipticCurve& e, long prec);

/// The global function x^i y^j (j <= 1), with pole order 2i + 3j at O.
struct RRFunction {
  int i;
  int j;
  int pole_order;
  LaurentSeries expansion;
};

/// Basis of L(m O): x^i y^j with 2i + 3j <= m, ordered by pole order.
/// Expansions are known to precision `prec`.
std::vector<RRFunction> rr_basis(const EllipticCurve& e, int m, long prec);

/// A finite F_p-combination of the basis functions x^i y^j, keyed by (i, j).
/// Zero coefficients are never stored.
class GlobalCombination {
 public:
  using Key = std::pair<int, int>;

  explicit GlobalCombination(int p) : p_(p) {}

  void add(int i, int j, int c);
  int coefficient(int i, int j) const;
  const std::map<Key, int>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int pole_order() const;

  GlobalCombination& operator+=(const GlobalCombination& o);
  friend bool operator==(const GlobalCombination& a, const GlobalCombination& b) {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }

 private:
  int p_;
  std::map<Key, int> terms_;
};

/// The expansion of a combination at O, to precision `prec`.
LaurentSeries evaluate(const EllipticCurve& e, const GlobalCombination& g, long prec);

struct PrincipalReduction {
  GlobalCombination g;
  /// The class of f in H^1(E, O_E) = k((t)) / (O(E - O) + k[[t]]), in the
  /// basis [t^-1].
  int c;
  /// In t k[[t]]. Constants of f are absorbed into g.
  LaurentSeries tail;
};

/// f = g + c t^-1 + tail, eliminating the terms of exponent <= -2 greedily
/// from the most negative one with the unique basis function of that pole
/// order. Requires a series over F_p with finite precision >= 0.
PrincipalReduction reduce_principal_part(const EllipticCurve& e, const LaurentSeries& f);

/// #E(F_p), including O.
long point_count(const EllipticCurve& e);

/// Coefficient of x^{p-1} in (x^3 + Ax + B)^{(p-1)/2}, a residue mod p.
int hasse_deuring(const EllipticCurve& e);

/// The eigenvalue of Frobenius on H^1(E, O_E): the class of t^-p.
int frobenius_on_h1(const EllipticCurve& e);

bool is_anomalous(const EllipticCurve& e);

struct H1Class {
  int c;
  friend bool operator==(H1Class a, H1Class b) noexcept { return a.c == b.c; }
};

/// wp* = F* - Id on H^1, i.e. c -> (alpha - 1) c.
H1Class wp_star_on_h1(const EllipticCurve& e, H1Class cls);

struct EllipticReport {
  int p = 0;
  int a = 0;
  int b = 0;
  long count = 0;
  int alpha = 0;
  int deuring = 0;
  bool anomalous = false;
  bool injective = false;
  bool surjective = false;
  bool equivalence = false;
  /// The verdict (alpha != 1) differs from the literal reading (#E != p).
  bool discrepancy = false;
};

/// Assembles the report and cross-checks alpha against the point count and
/// the Hasse invariant. Throws IntegrityError when they disagree.
EllipticReport verdict_from_invariants(int p, int a, int b, long count, int alpha, int deuring);

EllipticReport elliptic_verdict(const EllipticCurve& e);

/// Every nonsingular curve over F_p, in (A, B) order. The parallel version
/// splits the (A, B) grid across OpenMP threads.
std::vector<EllipticReport> scan_curves(int p);
std::vector<EllipticReport> scan_curves_serial(int p);

struct EllipticSplit {
  LaurentSeries b;
  GlobalCombination g;
  /// Zero whenever alpha != 1.
  int obstruction;
};

/// Minimum precision accepted by split_elliptic.
inline long elliptic_split_min_precision(const EllipticCurve& e) { return e.p() + 2; }

/// f = wp(b) + g + obstruction t^-1 to the precision of f.
///
/// After reducing f and solving the tail, a remaining class c != 0 is
/// cancelled by wp(d t^-1) with d (alpha - 1) = c, which is possible iff
/// alpha != 1. Throws UsageError if the precision is below p + 2.
EllipticSplit split_elliptic(const EllipticCurve& e, const LaurentSeries& f);

/// For an anomalous curve, b with wp(b) global but b not global:
/// b = t^-1 - wp_solve_tail(l), where t^-p - t^-1 = G + l with G global.
/// Throws DomainError when alpha != 1.
LaurentSeries anomalous_witness(const EllipticCurve& e, long prec);

}  // namespace pcov
