#include "pcovers/arith/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "pcovers/arith/prime_poly.hpp"
#include "pcovers/errors.hpp"

namespace pcov {

struct Field::Descriptor {
  int p = 0;
  int e = 0;
  std::vector<int> modulus;
  // (F - I) over F_p, row-major e x e, where F is the matrix of x -> x^p.
  std::vector<int> wp_matrix;
};

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<int, std::vector<int>>, std::unique_ptr<Field::Descriptor>>& registry() {
  static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<Field::Descriptor>> r;
  return r;
}

}  // namespace

Field Field::make(int p, std::vector<int> modulus) {
  if (!fp_poly::is_prime(p) || p > kMaxPrime)
    throw UsageError("characteristic must be a prime <= " + std::to_string(kMaxPrime) + ", got " + std::to_string(p));
  for (int& c : modulus) c = fp_poly::mod(c, p);
  fp_poly::trim(modulus);
  const int e = fp_poly::degree(modulus);
  if (e < 1) throw UsageError("field modulus must have degree >= 1");
  if (e > kMaxDegree) throw UsageError("extension degree exceeds " + std::to_string(kMaxDegree));
  if (modulus.back() != 1) throw UsageError("field modulus must be monic");
  if (e == 1 && modulus[0] != 0) throw UsageError("prime field modulus must be z");

  std::lock_guard lock(registry_mutex());
  auto key = std::make_pair(p, modulus);
  auto it = registry().find(key);
  if (it != registry().end()) return Field(it->second.get());

  if (!fp_poly::is_irreducible(modulus, p)) throw UsageError("field modulus is not irreducible over F_p");

  auto d = std::make_unique<Descriptor>();
  d->p = p;
  d->e = e;
  d->modulus = modulus;
  const Field f(d.get());

  d->wp_matrix.assign(static_cast<std::size_t>(e * e), 0);
  for (int k = 0; k < e; ++k) {
    std::vector<int> zk(static_cast<std::size_t>(e), 0);
    zk[static_cast<std::size_t>(k)] = 1;
    const Fq img = frobenius(f.from_coeffs(zk)) - f.from_coeffs(zk);
    for (int r = 0; r < e; ++r) d->wp_matrix[static_cast<std::size_t>(r * e + k)] = img.coeff(r);
  }

  const Descriptor* raw = d.get();
  registry().emplace(std::move(key), std::move(d));
  return Field(raw);
}

Field Field::prime(int p) { return make(p, {0, 1}); }

Field Field::extension(int p, int e) {
  if (!fp_poly::is_prime(p) || p > kMaxPrime) throw UsageError("characteristic must be a prime <= 97");
  if (e < 1 || e > kMaxDegree) throw UsageError("extension degree out of range");
  return make(p, fp_poly::first_irreducible(p, e));
}

int Field::characteristic() const noexcept { return desc_->p; }
int Field::degree() const noexcept { return desc_->e; }
const std::vector<int>& Field::modulus() const noexcept { return desc_->modulus; }

std::uint64_t Field::order() const {
  std::uint64_t q = 1;
  for (int i = 0; i < desc_->e; ++i) {
    if (q > UINT64_MAX / static_cast<std::uint64_t>(desc_->p)) throw UsageError("field order overflows 64 bits");
    q *= static_cast<std::uint64_t>(desc_->p);
  }
  return q;
}

Fq Field::zero() const { return Fq(*this); }

Fq Field::one() const { return from_int(1); }

Fq Field::generator() const {
  Fq r(*this);
  if (desc_->e > 1) r.c_[1] = 1;
  return r;
}

Fq Field::from_int(long long v) const {
  Fq r(*this);
  r.c_[0] = static_cast<std::uint8_t>(fp_poly::mod(v, desc_->p));
  return r;
}

Fq Field::from_coeffs(std::span<const int> coeffs) const {
  // Reduce an arbitrary-length polynomial in z.
  fp_poly::Poly poly(coeffs.begin(), coeffs.end());
  for (int& c : poly) c = fp_poly::mod(c, desc_->p);
  fp_poly::trim(poly);
  if (fp_poly::degree(poly) >= desc_->e) poly = fp_poly::rem(poly, desc_->modulus, desc_->p);
  Fq r(*this);
  for (std::size_t i = 0; i < poly.size(); ++i) r.c_[i] = static_cast<std::uint8_t>(poly[i]);
  return r;
}

Fq Field::from_index(std::uint64_t index) const {
  Fq r(*this);
  for (int k = 0; k < desc_->e; ++k) {
    r.c_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(desc_->p));
    index /= static_cast<std::uint64_t>(desc_->p);
  }
  if (index != 0) throw UsageError("field element index out of range");
  return r;
}

// ---------------------------------------------------------------------------

Fq::Fq(Field f) : field_(f) {}

bool Fq::is_zero() const noexcept {
  for (int k = 0; k < degree(); ++k)
    if (c_[static_cast<std::size_t>(k)] != 0) return false;
  return true;
}

bool Fq::is_one() const noexcept {
  if (c_[0] != 1) return false;
  for (int k = 1; k < degree(); ++k)
    if (c_[static_cast<std::size_t>(k)] != 0) return false;
  return true;
}

bool Fq::in_prime_field() const noexcept {
  for (int k = 1; k < degree(); ++k)
    if (c_[static_cast<std::size_t>(k)] != 0) return false;
  return true;
}

std::uint64_t Fq::index() const {
  std::uint64_t idx = 0;
  const auto p = static_cast<std::uint64_t>(characteristic());
  for (int k = degree() - 1; k >= 0; --k) idx = idx * p + c_[static_cast<std::size_t>(k)];
  return idx;
}

namespace {

void require_same(const Fq& a, const Fq& b) {
  if (!(a.field() == b.field())) throw UsageError("field descriptor mismatch");
}

}  // namespace

Fq Fq::operator-() const {
  Fq r(field_);
  const int p = characteristic();
  for (int k = 0; k < degree(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    r.c_[i] = static_cast<std::uint8_t>(c_[i] == 0 ? 0 : p - c_[i]);
  }
  return r;
}

Fq& Fq::operator+=(const Fq& o) {
  require_same(*this, o);
  const int p = characteristic();
  for (int k = 0; k < degree(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    int s = c_[i] + o.c_[i];
    if (s >= p) s -= p;
    c_[i] = static_cast<std::uint8_t>(s);
  }
  return *this;
}

Fq& Fq::operator-=(const Fq& o) {
  require_same(*this, o);
  const int p = characteristic();
  for (int k = 0; k < degree(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    int s = c_[i] - o.c_[i];
    if (s < 0) s += p;
    c_[i] = static_cast<std::uint8_t>(s);
  }
  return *this;
}

Fq& Fq::operator*=(int k) {
  const int p = characteristic();
  const int m = fp_poly::mod(k, p);
  for (int j = 0; j < degree(); ++j) {
    const auto i = static_cast<std::size_t>(j);
    c_[i] = static_cast<std::uint8_t>(c_[i] * m % p);
  }
  return *this;
}

Fq& Fq::operator*=(const Fq& o) {
  require_same(*this, o);
  const int p = characteristic();
  const int e = degree();
  if (e == 1) {
    c_[0] = static_cast<std::uint8_t>(c_[0] * o.c_[0] % p);
    return *this;
  }
  std::array<long long, 2 * Field::kMaxDegree> acc{};
  for (int i = 0; i < e; ++i) {
    const int a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; j < e; ++j) acc[static_cast<std::size_t>(i + j)] += a * o.c_[static_cast<std::size_t>(j)];
  }
  // z^e = -(f_0 + ... + f_{e-1} z^{e-1})
  const auto& f = field_.modulus();
  for (int k = 2 * e - 2; k >= e; --k) {
    const long long c = acc[static_cast<std::size_t>(k)] % p;
    if (c == 0) continue;
    for (int i = 0; i < e; ++i) acc[static_cast<std::size_t>(k - e + i)] += c * (p - f[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < e; ++i) c_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(acc[static_cast<std::size_t>(i)] % p);
  return *this;
}

bool operator==(const Fq& a, const Fq& b) noexcept {
  if (!(a.field_ == b.field_)) return false;
  for (int k = 0; k < a.degree(); ++k)
    if (a.c_[static_cast<std::size_t>(k)] != b.c_[static_cast<std::size_t>(k)]) return false;
  return true;
}

bool lex_less(const Fq& a, const Fq& b) noexcept {
  for (int k = 0; k < a.degree(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

Fq Fq::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in F_q");
  const int p = characteristic();
  if (degree() == 1) return field_.from_int(fp_poly::inv_mod(c_[0], p));
  fp_poly::Poly a(c_.begin(), c_.begin() + degree());
  fp_poly::trim(a);
  const fp_poly::Poly inv = fp_poly::invmod(a, field_.modulus(), p);
  return field_.from_coeffs(inv);
}

Fq Fq::pow(std::uint64_t e) const {
  Fq result = field_.one();
  Fq base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------

Fq frobenius(const Fq& a) {
  if (a.degree() == 1) return a;
  return a.pow(static_cast<std::uint64_t>(a.characteristic()));
}

Fq pth_root(const Fq& a) {
  Fq r = a;
  for (int i = 1; i < a.degree(); ++i) r = frobenius(r);
  return r;
}

int trace_to_prime(const Fq& a) {
  Fq sum = a;
  Fq cur = a;
  for (int i = 1; i < a.degree(); ++i) {
    cur = frobenius(cur);
    sum += cur;
  }
  return sum.coeff(0);
}

std::optional<Fq> artin_schreier_solve(const Fq& a) {
  const Field f = a.field();
  const int p = f.characteristic();
  const int e = f.degree();
  if (e == 1) {
    // x^p - x vanishes identically on F_p.
    if (a.is_zero()) return f.zero();
    return std::nullopt;
  }
  // Gaussian elimination on [(F - I) | a] over F_p.
  const auto& mat = f.descriptor().wp_matrix;
  const auto cols = static_cast<std::size_t>(e + 1);
  std::vector<int> aug(static_cast<std::size_t>(e) * cols);
  for (int r = 0; r < e; ++r) {
    for (int c = 0; c < e; ++c) aug[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(c)] = mat[static_cast<std::size_t>(r * e + c)];
    aug[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(e)] = a.coeff(r);
  }
  auto at = [&](int r, int c) -> int& { return aug[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(c)]; };
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < e && row < e; ++c) {
    int piv = -1;
    for (int r = row; r < e; ++r)
      if (at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int k = 0; k <= e; ++k) std::swap(at(row, k), at(piv, k));
    const int inv = fp_poly::inv_mod(at(row, c), p);
    for (int k = 0; k <= e; ++k) at(row, k) = at(row, k) * inv % p;
    for (int r = 0; r < e; ++r) {
      if (r == row || at(r, c) == 0) continue;
      const int m = at(r, c);
      for (int k = 0; k <= e; ++k) at(r, k) = fp_poly::mod(at(r, k) - m * at(row, k), p);
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < e; ++r)
    if (at(r, e) != 0) return std::nullopt;
  std::vector<int> x(static_cast<std::size_t>(e), 0);
  for (int r = 0; r < row; ++r) x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = at(r, e);
  Fq sol = f.from_coeffs(x);
  // Kernel is F_p; pick the representative with constant coefficient 0.
  sol -= f.from_int(sol.coeff(0));
  return sol;
}

std::vector<Fq> enumerate_field(Field f) {
  const std::uint64_t q = f.order();
  if (q > (1u << 24)) throw UsageError("field too large to enumerate");
  std::vector<Fq> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(f.from_index(i));
  return out;
}

}  // namespace pcov
