#include "pcovers/arith/prime_poly.hpp"

#include <algorithm>
#include <utility>

#include "pcovers/errors.hpp"

namespace pcov::fp_poly {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int mod(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod(int a, int p) {
  a = mod(a, p);
  if (a == 0) throw DomainError("inverse of zero in F_p");
  // p is small: Fermat.
  long long r = 1, b = a;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<int>(r);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, int p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] + b[i], p);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, int p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] - b[i], p);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<long long>(a[i]) * b[j];
  }
  Poly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = mod(acc[i], p);
  trim(r);
  return r;
}

Poly rem(const Poly& a, const Poly& m, int p) {
  if (m.empty()) throw DomainError("polynomial division by zero");
  Poly r = a;
  trim(r);
  const int dm = degree(m);
  const int lead_inv = inv_mod(m.back(), p);
  while (degree(r) >= dm) {
    const int shift = degree(r) - dm;
    const long long c = static_cast<long long>(r.back()) * lead_inv % p;
    for (int i = 0; i <= dm; ++i) r[shift + i] = mod(r[shift + i] - c * m[i], p);
    trim(r);
  }
  return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int p) { return rem(mul(a, b, p), m, p); }

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m, int p) {
  Poly result{1};
  result = rem(result, m, p);
  Poly base = rem(a, m, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m, p);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m, p);
  }
  return result;
}

Poly monic(const Poly& f, int p) {
  if (f.empty()) return f;
  const int c = inv_mod(f.back(), p);
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<int>(static_cast<long long>(f[i]) * c % p);
  return r;
}

Poly gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly invmod(const Poly& a, const Poly& m, int p) {
  // Extended Euclid tracking only the coefficient of a.
  Poly r0 = m, r1 = rem(a, m, p);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    // q = r0 / r1
    Poly q;
    Poly r = r0;
    const int d1 = degree(r1);
    const int lead_inv = inv_mod(r1.back(), p);
    if (degree(r) >= d1) q.assign(degree(r) - d1 + 1, 0);
    while (degree(r) >= d1) {
      const int shift = degree(r) - d1;
      const int c = static_cast<int>(static_cast<long long>(r.back()) * lead_inv % p);
      q[shift] = c;
      for (int i = 0; i <= d1; ++i) r[shift + i] = mod(r[shift + i] - static_cast<long long>(c) * r1[i], p);
      trim(r);
    }
    trim(q);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0) return {};
  const int c = inv_mod(r0[0], p);
  return mul(s0, Poly{c}, p);
}

bool is_irreducible(const Poly& f, int p) {
  const int e = degree(f);
  if (e < 1) return false;
  if (e == 1) return true;
  const Poly x{0, 1};
  Poly h = rem(x, f, p);
  for (int i = 1; i <= e / 2; ++i) {
    h = powmod(h, static_cast<std::uint64_t>(p), f, p);
    if (degree(gcd(sub(h, x, p), f, p)) > 0) return false;
  }
  return true;
}

Poly first_irreducible(int p, int deg) {
  if (!is_prime(p)) throw UsageError("characteristic must be prime");
  if (deg < 1) throw UsageError("extension degree must be at least 1");
  if (deg == 1) return Poly{0, 1};
  Poly f(deg + 1, 0);
  f[deg] = 1;
  // Odometer over the lower coefficients; constant term must be nonzero.
  for (;;) {
    int k = 0;
    while (k < deg) {
      if (++f[k] < p) break;
      f[k] = 0;
      ++k;
    }
    if (k == deg) break;
    if (f[0] != 0 && is_irreducible(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found");
}

}  // namespace pcov::fp_poly
