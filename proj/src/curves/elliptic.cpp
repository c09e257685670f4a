#include "pcovers/curves/elliptic.hpp"

#include <string>

#include "pcovers/arith/prime_poly.hpp"
#include "pcovers/errors.hpp"
#include "pcovers/series/artin_schreier.hpp"

namespace pcov {

namespace {

LaurentSeries power(const LaurentSeries& s, int k) {
  LaurentSeries r = LaurentSeries::constant(s.field().one());
  for (int i = 0; i < k; ++i) r = r * s;
  return r;
}

}  // namespace

bool EllipticCurve::is_nonsingular(int p, int a, int b) {
  const long long a3 = static_cast<long long>(a) * a % p * a % p;
  const long long b2 = static_cast<long long>(b) * b % p;
  return fp_poly::mod(4 * a3 + 27 * b2, p) != 0;
}

EllipticCurve::EllipticCurve(int p, int a, int b) : p_(p) {
  if (!fp_poly::is_prime(p) || p < 5 || p > Field::kMaxPrime)
    throw DomainError("elliptic curves need a prime 5 <= p <= 97, got " + std::to_string(p));
  a_ = fp_poly::mod(a, p);
  b_ = fp_poly::mod(b, p);
  if (!is_nonsingular(p, a_, b_))
    throw DomainError("singular curve y^2 = x^3 + " + std::to_string(a_) + "x + " + std::to_string(b_) + " over F_" +
                      std::to_string(p));
}

WeierstrassExpansion weierstrass_expand(const EllipticCurve& e, long prec) {
  if (prec < 6) throw UsageError("weierstrass_expand needs precision >= 6");
  const Field f = e.field();
  const Fq a = f.from_int(e.a());
  const Fq b = f.from_int(e.b());
  // w = z^3 (1 + O(z^4)); 1/w loses 6 orders, so carry 6 extra.
  const long n = prec + 6;
  const LaurentSeries z = t_power(f, 1);
  const LaurentSeries z3 = t_power(f, 3);
  LaurentSeries w = t_power(f, 3, n);
  // Each pass fixes at least four more coefficients.
  for (long pass = 0; pass <= n; ++pass) {
    const LaurentSeries w2 = w * w;
    LaurentSeries next = (z3 + a * (z * w2) + b * (w2 * w)).truncated(n);
    if (next == w) break;
    w = std::move(next);
  }
  const LaurentSeries winv = w.inverse();
  return WeierstrassExpansion{(z * winv).truncated(prec), (-winv).truncated(prec)};
}

std::vector<RRFunction> rr_basis(const EllipticCurve& e, int m, long prec) {
  if (m < 0) throw UsageError("rr_basis needs m >= 0");
  std::vector<RRFunction> out;
  out.push_back(RRFunction{0, 0, 0, LaurentSeries::constant(e.field().one(), prec)});
  if (m < 2) return out;
  // x^i y has precision q - 2i - 1 when x, y have precision q.
  const WeierstrassExpansion xy = weierstrass_expand(e, std::max<long>(6, prec + m + 3));
  for (int k = 2; k <= m; ++k) {
    const int j = k % 2;
    const int i = (k - 3 * j) / 2;
    LaurentSeries s = power(xy.x, i);
    if (j == 1) s = s * xy.y;
    out.push_back(RRFunction{i, j, k, s.truncated(prec)});
  }
  return out;
}

void GlobalCombination::add(int i, int j, int c) {
  const Key key{i, j};
  const int v = fp_poly::mod(static_cast<long long>(coefficient(i, j)) + c, p_);
  if (v == 0) terms_.erase(key);
  else terms_[key] = v;
}

int GlobalCombination::coefficient(int i, int j) const {
  const auto it = terms_.find(Key{i, j});
  return it == terms_.end() ? 0 : it->second;
}

int GlobalCombination::pole_order() const {
  int m = 0;
  for (const auto& [key, c] : terms_) m = std::max(m, 2 * key.first + 3 * key.second);
  return m;
}

GlobalCombination& GlobalCombination::operator+=(const GlobalCombination& o) {
  if (o.p_ != p_) throw UsageError("combinations over different primes");
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

LaurentSeries evaluate(const EllipticCurve& e, const GlobalCombination& g, long prec) {
  const Field f = e.field();
  LaurentSeries out = LaurentSeries::zero(f, prec);
  for (const RRFunction& phi : rr_basis(e, g.pole_order(), prec)) {
    const int c = g.coefficient(phi.i, phi.j);
    if (c != 0) out += f.from_int(c) * phi.expansion;
  }
  return out;
}

PrincipalReduction reduce_principal_part(const EllipticCurve& e, const LaurentSeries& f) {
  const Field field = e.field();
  if (!(f.field() == field)) throw UsageError("series and curve are over different fields");
  if (f.is_exact()) throw UsageError("reduce_principal_part needs a finite precision");
  if (f.precision() < 0)
    throw UsageError("reduce_principal_part needs precision >= 0, got " + std::to_string(f.precision()));
  const long prec = f.precision();
  const int m = f.is_zero() ? 0 : static_cast<int>(std::max<long>(0, -f.valuation()));
  const std::vector<RRFunction> basis = rr_basis(e, m, prec);

  PrincipalReduction r{GlobalCombination(e.p()), 0, LaurentSeries::zero(field, prec)};
  LaurentSeries work = f;
  for (int k = m; k >= 2; --k) {
    const Fq a = work.coeff(-k);
    if (a.is_zero()) continue;
    // basis[k - 1] has pole order k and leading coefficient (-1)^j.
    const RRFunction& phi = basis[static_cast<std::size_t>(k - 1)];
    const Fq c = phi.j == 1 ? -a : a;
    work -= c * phi.expansion;
    r.g.add(phi.i, phi.j, c.coeff(0));
  }
  r.c = work.coeff(-1).coeff(0);
  r.g.add(0, 0, work.coeff(0).coeff(0));
  r.tail = work.positive_part();
  return r;
}

long point_count(const EllipticCurve& e) {
  const int p = e.p();
  std::vector<int> roots(static_cast<std::size_t>(p), 0);
  for (long long y = 0; y < p; ++y) ++roots[static_cast<std::size_t>(y * y % p)];
  long count = 1;
  for (long long x = 0; x < p; ++x) {
    const long long rhs = (x * x % p * x + e.a() * x + e.b()) % p;
    count += roots[static_cast<std::size_t>(rhs)];
  }
  return count;
}

int hasse_deuring(const EllipticCurve& e) {
  const int p = e.p();
  const fp_poly::Poly cubic{e.b(), e.a(), 0, 1};
  fp_poly::Poly acc{1};
  for (int k = 0; k < (p - 1) / 2; ++k) acc = fp_poly::mul(acc, cubic, p);
  return p - 1 < static_cast<int>(acc.size()) ? acc[static_cast<std::size_t>(p - 1)] : 0;
}

int frobenius_on_h1(const EllipticCurve& e) {
  return reduce_principal_part(e, t_power(e.field(), -e.p(), 1)).c;
}

bool is_anomalous(const EllipticCurve& e) { return point_count(e) == e.p(); }

H1Class wp_star_on_h1(const EllipticCurve& e, H1Class cls) {
  const int alpha = frobenius_on_h1(e);
  return H1Class{fp_poly::mod(static_cast<long long>(alpha - 1) * cls.c, e.p())};
}

EllipticReport verdict_from_invariants(int p, int a, int b, long count, int alpha, int deuring) {
  const int trace = fp_poly::mod(p + 1 - count, p);
  if (alpha != trace || alpha != deuring)
    throw IntegrityError("Frobenius eigenvalue mismatch on y^2 = x^3 + " + std::to_string(a) + "x + " +
                         std::to_string(b) + " over F_" + std::to_string(p) + ": H^1 gives " + std::to_string(alpha) +
                         ", point count gives " + std::to_string(trace) + ", Hasse invariant gives " +
                         std::to_string(deuring));
  EllipticReport r;
  r.p = p;
  r.a = a;
  r.b = b;
  r.count = count;
  r.alpha = alpha;
  r.deuring = deuring;
  r.anomalous = count == p;
  r.injective = r.surjective = r.equivalence = alpha != 1;
  r.discrepancy = (alpha == 1) != r.anomalous;
  return r;
}

EllipticReport elliptic_verdict(const EllipticCurve& e) {
  return verdict_from_invariants(e.p(), e.a(), e.b(), point_count(e), frobenius_on_h1(e), hasse_deuring(e));
}

EllipticSplit split_elliptic(const EllipticCurve& e, const LaurentSeries& f) {
  const long need = elliptic_split_min_precision(e);
  if (f.is_exact() || f.precision() < need)
    throw UsageError("split_elliptic needs a finite precision >= " + std::to_string(need) + " (p + 2)");
  const Field field = e.field();
  const long prec = f.precision();
  const int p = e.p();

  EllipticSplit out{LaurentSeries::zero(field), GlobalCombination(p), 0};
  LaurentSeries work = f;
  int alpha = -1;
  // One round clears everything but the class; a second clears the class.
  for (int round = 0; round < 3; ++round) {
    const PrincipalReduction red = reduce_principal_part(e, work);
    out.g += red.g;
    out.b += wp_solve_tail(red.tail);
    if (red.c == 0) return out;
    if (alpha < 0) alpha = frobenius_on_h1(e);
    if (alpha == 1) {
      out.obstruction = red.c;
      return out;
    }
    const Fq d = field.from_int(red.c) * field.from_int(alpha - 1).inverse();
    const LaurentSeries dt = LaurentSeries::monomial(d, -1);
    out.b += dt;
    work = (LaurentSeries::monomial(field.from_int(red.c), -1) - wp_apply(dt)).truncated(prec);
  }
  throw IntegrityError("split_elliptic did not terminate after three rounds");
}

LaurentSeries anomalous_witness(const EllipticCurve& e, long prec) {
  if (frobenius_on_h1(e) != 1) throw DomainError("the curve is not anomalous mod p; wp is injective on H^1");
  const Field f = e.field();
  const LaurentSeries target = (t_power(f, -e.p()) - t_power(f, -1)).truncated(prec);
  const PrincipalReduction red = reduce_principal_part(e, target);
  if (red.c != 0) throw IntegrityError("class of t^-p - t^-1 is nonzero on a curve with alpha = 1");
  return t_power(f, -1, prec) - wp_solve_tail(red.tail);
}

}  // namespace pcov
