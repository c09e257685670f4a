#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "pcovers/arith/field.hpp"
#include "pcovers/errors.hpp"

namespace pcov {

namespace {

// Polynomials over F_Q, low-to-high, trimmed.
using QPoly = std::vector<Fq>;

void trim(QPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int deg(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

QPoly rem(QPoly a, const QPoly& m) {
  trim(a);
  const int dm = deg(m);
  const Fq lead_inv = m.back().inverse();
  while (deg(a) >= dm) {
    const int shift = deg(a) - dm;
    const Fq c = a.back() * lead_inv;
    for (int i = 0; i <= dm; ++i) a[static_cast<std::size_t>(shift + i)] -= c * m[static_cast<std::size_t>(i)];
    trim(a);
  }
  return a;
}

QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m, Field f) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return rem(std::move(r), m);
}

QPoly powmod(QPoly base, std::uint64_t e, const QPoly& m, Field f) {
  QPoly result = rem(QPoly{f.one()}, m);
  base = rem(std::move(base), m);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m, f);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m, f);
  }
  return result;
}

QPoly monic(QPoly f) {
  if (f.empty()) return f;
  const Fq inv = f.back().inverse();
  for (auto& c : f) c *= inv;
  return f;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

// One root of g, which must split into distinct linear factors over F_Q.
Fq find_root(QPoly g, Field big, std::mt19937_64& rng) {
  g = monic(std::move(g));
  const int p = big.characteristic();
  const int n = big.degree();
  while (deg(g) > 1) {
    Fq delta = big.zero();
    {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (auto& v : c) v = static_cast<int>(rng() % static_cast<std::uint64_t>(p));
      delta = big.from_coeffs(c);
    }
    QPoly h;
    if (p == 2) {
      // Trace map Tr(delta x) = sum_{i<n} (delta x)^{2^i} mod g.
      QPoly term = rem(QPoly{big.zero(), delta}, g);
      h = term;
      for (int i = 1; i < n; ++i) {
        term = mulmod(term, term, g, big);
        h.resize(std::max(h.size(), term.size()), big.zero());
        for (std::size_t k = 0; k < term.size(); ++k) h[k] += term[k];
        trim(h);
      }
    } else {
      // (x + delta)^{(Q-1)/2} = (prod_{i<n} u^{p^i})^{(p-1)/2}
      QPoly u = rem(QPoly{delta, big.one()}, g);
      QPoly prod = u;
      QPoly cur = u;
      for (int i = 1; i < n; ++i) {
        cur = powmod(cur, static_cast<std::uint64_t>(p), g, big);
        prod = mulmod(prod, cur, g, big);
      }
      h = powmod(prod, static_cast<std::uint64_t>((p - 1) / 2), g, big);
      if (h.empty()) h.push_back(big.zero());
      h[0] -= big.one();
      trim(h);
    }
    QPoly d = gcd(g, h);
    if (deg(d) > 0 && deg(d) < deg(g)) {
      // keep the smaller factor
      if (2 * deg(d) <= deg(g)) {
        g = std::move(d);
      } else {
        // g / d by long division
        QPoly r = g;
        QPoly q(static_cast<std::size_t>(deg(g) - deg(d) + 1), big.zero());
        while (deg(r) >= deg(d)) {
          const int shift = deg(r) - deg(d);
          const Fq c = r.back();
          q[static_cast<std::size_t>(shift)] = c;
          for (int i = 0; i <= deg(d); ++i) r[static_cast<std::size_t>(shift + i)] -= c * d[static_cast<std::size_t>(i)];
          trim(r);
        }
        trim(q);
        g = monic(std::move(q));
      }
    }
  }
  return -g[0];
}

}  // namespace

FieldEmbedding::FieldEmbedding(Field from, Field to) : from_(from), to_(to), generator_image_(to.zero()) {
  if (from.characteristic() != to.characteristic()) throw UsageError("embedding between fields of different characteristic");
  if (to.degree() % from.degree() != 0) throw UsageError("source degree must divide target degree");
  const int e = from.degree();
  if (e == 1) {
    powers_.push_back(to.one());
    return;
  }
  if (from == to) {
    generator_image_ = to.generator();
  } else {
    QPoly f;
    for (int c : from.modulus()) f.push_back(to.from_int(c));
    std::mt19937_64 rng(0x5eedULL);
    generator_image_ = find_root(std::move(f), to, rng);
  }
  fill_powers();
}

FieldEmbedding::FieldEmbedding(Field from, Field to, Fq generator_image)
    : from_(from), to_(to), generator_image_(std::move(generator_image)) {
  if (from.degree() == 1) {
    powers_.push_back(to.one());
    return;
  }
  fill_powers();
}

void FieldEmbedding::fill_powers() {
  Fq cur = to_.one();
  for (int k = 0; k < from_.degree(); ++k) {
    powers_.push_back(cur);
    cur *= generator_image_;
  }
}

FieldEmbedding FieldEmbedding::compose(const FieldEmbedding& outer, const FieldEmbedding& inner) {
  if (!(inner.target() == outer.source())) throw UsageError("embeddings do not compose");
  return FieldEmbedding(inner.source(), outer.target(), outer(inner.image_of_generator()));
}

Fq FieldEmbedding::operator()(const Fq& a) const {
  if (!(a.field() == from_)) throw UsageError("embedding applied to element of the wrong field");
  Fq r = to_.zero();
  for (int k = 0; k < from_.degree(); ++k)
    if (a.coeff(k) != 0) r += powers_[static_cast<std::size_t>(k)] * a.coeff(k);
  return r;
}

}  // namespace pcov
