#include "pcovers/series/laurent.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "pcovers/errors.hpp"

namespace pcov {

namespace {

constexpr long kExact = LaurentSeries::kExact;

long sat(long x) { return std::min(x, kExact); }

long sat_add(long a, long b) {
  if (a >= kExact || b >= kExact) return kExact;
  return sat(a + b);
}

void require_same_field(const LaurentSeries& a, const LaurentSeries& b) {
  if (!(a.field() == b.field())) throw UsageError("series over different fields");
}

}  // namespace

LaurentSeries::LaurentSeries(Field f, long val, long prec, std::vector<Fq> coeffs)
    : field_(f), val_(val), prec_(sat(prec)), terms_(std::move(coeffs)) {
  for (const Fq& c : terms_)
    if (!(c.field() == field_)) throw UsageError("series coefficient from a different field");
  normalize();
}

void LaurentSeries::normalize() {
  if (!terms_.empty() && val_ + static_cast<long>(terms_.size()) - 1 > prec_) {
    const long keep = prec_ - val_ + 1;
    terms_.resize(static_cast<std::size_t>(std::max(0L, keep)), field_.zero());
  }
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
  std::size_t lead = 0;
  while (lead < terms_.size() && terms_[lead].is_zero()) ++lead;
  if (lead > 0) {
    terms_.erase(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ += static_cast<long>(lead);
  }
  if (terms_.empty()) val_ = prec_ >= kExact ? kExact : prec_ + 1;
}

LaurentSeries LaurentSeries::zero(Field f, long prec) { return LaurentSeries(f, 0, prec, {}); }

LaurentSeries LaurentSeries::constant(const Fq& c, long prec) { return monomial(c, 0, prec); }

LaurentSeries LaurentSeries::monomial(const Fq& c, long exponent, long prec) {
  return LaurentSeries(c.field(), exponent, prec, {c});
}

LaurentSeries t_power(Field f, long k, long prec) { return LaurentSeries::monomial(f.one(), k, prec); }

Fq LaurentSeries::coeff(long i) const {
  if (i > prec_) throw UsageError("coefficient of t^" + std::to_string(i) + " is beyond precision " + std::to_string(prec_));
  if (terms_.empty() || i < val_ || i > last_exponent()) return field_.zero();
  return terms_[static_cast<std::size_t>(i - val_)];
}

LaurentSeries LaurentSeries::truncated(long prec) const {
  if (prec >= prec_) return *this;
  LaurentSeries r = *this;
  r.prec_ = prec;
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::slice(long lo, long hi) const {
  // Every coefficient up to the precision is known, so a slice ending there
  // is exact; otherwise it inherits the precision.
  const long out_prec = hi > prec_ ? prec_ : kExact;
  std::vector<Fq> out;
  const long start = std::max(lo, val_);
  const long stop = std::min(hi, last_exponent());
  for (long i = start; i <= stop; ++i) out.push_back(terms_[static_cast<std::size_t>(i - val_)]);
  return LaurentSeries(field_, start, out_prec, std::move(out));
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (Fq& c : r.terms_) c = -c;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  require_same_field(*this, o);
  const long prec = std::min(prec_, o.prec_);
  if (o.terms_.empty()) {
    prec_ = prec;
    normalize();
    return *this;
  }
  if (terms_.empty()) {
    *this = o;
    prec_ = prec;
    normalize();
    return *this;
  }
  const long lo = std::min(val_, o.val_);
  const long hi = std::min(std::max(last_exponent(), o.last_exponent()), prec);
  if (hi < lo) {
    *this = zero(field_, prec);
    return *this;
  }
  std::vector<Fq> out(static_cast<std::size_t>(hi - lo + 1), field_.zero());
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const long e = val_ + static_cast<long>(k);
    if (e > hi) break;
    out[static_cast<std::size_t>(e - lo)] = terms_[k];
  }
  for (std::size_t k = 0; k < o.terms_.size(); ++k) {
    const long e = o.val_ + static_cast<long>(k);
    if (e > hi) break;
    out[static_cast<std::size_t>(e - lo)] += o.terms_[k];
  }
  val_ = lo;
  prec_ = prec;
  terms_ = std::move(out);
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_field(a, b);
  const long prec = std::min(sat_add(a.val_, b.prec_), sat_add(b.val_, a.prec_));
  if (a.terms_.empty() || b.terms_.empty()) return LaurentSeries::zero(a.field_, prec);
  const long lo = a.val_ + b.val_;
  const long hi = std::min(a.last_exponent() + b.last_exponent(), prec);
  if (hi < lo) return LaurentSeries::zero(a.field_, prec);
  std::vector<Fq> out(static_cast<std::size_t>(hi - lo + 1), a.field_.zero());
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].is_zero()) continue;
    const long ei = a.val_ + static_cast<long>(i);
    for (std::size_t j = 0; j < b.terms_.size(); ++j) {
      const long e = ei + b.val_ + static_cast<long>(j);
      if (e > hi) break;
      out[static_cast<std::size_t>(e - lo)] += a.terms_[i] * b.terms_[j];
    }
  }
  return LaurentSeries(a.field_, lo, prec, std::move(out));
}

LaurentSeries operator*(const Fq& c, const LaurentSeries& a) {
  if (!(c.field() == a.field_)) throw UsageError("scalar from a different field");
  LaurentSeries r = a;
  for (Fq& x : r.terms_) x *= c;
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::inverse(long target_prec) const {
  if (terms_.empty()) throw DomainError("inverse of a series that is zero to precision");
  const long v = val_;
  long out_prec;
  if (is_exact()) {
    if (terms_.size() == 1) return LaurentSeries(field_, -v, kExact, {terms_[0].inverse()});
    if (target_prec >= kExact) throw UsageError("inverse of an exact non-monomial series needs a target precision");
    out_prec = target_prec;
  } else {
    out_prec = std::min(prec_ - 2 * v, target_prec);
  }
  // f = t^v u with u a unit; invert u by the triangular recurrence.
  const long n = out_prec + v;  // exponents 0..n of u^{-1}
  if (n < 0) return zero(field_, out_prec);
  const Fq u0_inv = terms_[0].inverse();
  std::vector<Fq> w;
  w.reserve(static_cast<std::size_t>(n + 1));
  w.push_back(u0_inv);
  for (long k = 1; k <= n; ++k) {
    Fq acc = field_.zero();
    const long jmax = std::min<long>(k, static_cast<long>(terms_.size()) - 1);
    for (long j = 1; j <= jmax; ++j) acc += terms_[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(k - j)];
    w.push_back(-(acc * u0_inv));
  }
  return LaurentSeries(field_, -v, out_prec, std::move(w));
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  if (!(a.field_ == b.field_) || a.prec_ != b.prec_ || a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  return a.val_ == b.val_ && a.terms_ == b.terms_;
}

LaurentSeries frobenius(const LaurentSeries& f) {
  const long p = f.field().characteristic();
  const long prec = f.is_exact() ? LaurentSeries::kExact : sat(p * f.precision() + p - 1);
  if (f.is_zero()) return LaurentSeries::zero(f.field(), prec);
  const auto& t = f.terms();
  std::vector<Fq> out(static_cast<std::size_t>(p) * (t.size() - 1) + 1, f.field().zero());
  for (std::size_t k = 0; k < t.size(); ++k) out[k * static_cast<std::size_t>(p)] = frobenius(t[k]);
  return LaurentSeries(f.field(), p * f.valuation(), prec, std::move(out));
}

bool agrees(const LaurentSeries& a, const LaurentSeries& b) { return (a - b).is_zero(); }

}  // namespace pcov
