#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pcov {

class Fq;

/// Finite field F_q = F_p[z]/(f) with f monic irreducible of degree e.
///
/// Descriptors are interned: two handles built from the same (p, modulus)
/// compare equal and share one immutable descriptor, so handles are cheap to
/// copy and safe to share between threads.
class Field {
 public:
  static constexpr int kMaxPrime = 97;
  static constexpr int kMaxDegree = 64;

  /// Validates primality of p and irreducibility of the modulus
  /// (coefficients low-to-high, monic, degree >= 1). For e = 1 the modulus
  /// must be z.
  static Field make(int p, std::vector<int> modulus);

  static Field prime(int p);

  /// F_{p^e} with the default modulus: the first monic irreducible of degree
  /// e in base-p enumeration order (for F_4 this is z^2 + z + 1).
  static Field extension(int p, int e);

  int characteristic() const noexcept;
  int degree() const noexcept;
  const std::vector<int>& modulus() const noexcept;

  /// q = p^e; throws UsageError if it does not fit in 64 bits.
  std::uint64_t order() const;

  Fq zero() const;
  Fq one() const;
  /// The class of z.
  Fq generator() const;
  Fq from_int(long long v) const;
  Fq from_coeffs(std::span<const int> coeffs) const;
  /// Inverse of Fq::index(): base-p digits, coefficient 0 least significant.
  Fq from_index(std::uint64_t index) const;

  friend bool operator==(Field a, Field b) noexcept { return a.desc_ == b.desc_; }

  struct Descriptor;
  const Descriptor& descriptor() const noexcept { return *desc_; }

 private:
  explicit Field(const Descriptor* d) : desc_(d) {}
  const Descriptor* desc_;
};

/// Element of F_q, stored as e residues mod p (low-to-high in z).
class Fq {
 public:
  explicit Fq(Field f);

  Field field() const noexcept { return field_; }
  int characteristic() const noexcept { return field_.characteristic(); }
  int degree() const noexcept { return field_.degree(); }

  std::span<const std::uint8_t> coeffs() const noexcept {
    return {c_.data(), static_cast<std::size_t>(field_.degree())};
  }
  int coeff(int k) const noexcept { return c_[static_cast<std::size_t>(k)]; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the element lies in the prime field.
  bool in_prime_field() const noexcept;

  std::uint64_t index() const;

  Fq operator-() const;
  Fq& operator+=(const Fq& o);
  Fq& operator-=(const Fq& o);
  Fq& operator*=(const Fq& o);
  Fq& operator*=(int k);

  friend Fq operator+(Fq a, const Fq& b) { return a += b; }
  friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
  friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
  friend Fq operator*(Fq a, int k) { return a *= k; }
  friend Fq operator*(int k, Fq a) { return a *= k; }
  friend Fq operator/(const Fq& a, const Fq& b) { return a * b.inverse(); }

  friend bool operator==(const Fq& a, const Fq& b) noexcept;

  /// Throws DomainError for zero.
  Fq inverse() const;
  Fq pow(std::uint64_t e) const;

  /// Lexicographic order on the coefficient sequence (low-to-high).
  friend bool lex_less(const Fq& a, const Fq& b) noexcept;

 private:
  friend class Field;
  Field field_;
  std::array<std::uint8_t, Field::kMaxDegree> c_{};
};

/// a^p.
Fq frobenius(const Fq& a);

/// The unique b with b^p = a, computed as a^{p^{e-1}}.
Fq pth_root(const Fq& a);

/// Absolute trace sum_{i<e} a^{p^i}, a residue mod p.
int trace_to_prime(const Fq& a);

/// Some b with b^p - b = a, if one exists in F_q. A solution exists iff the
/// trace of a vanishes; the full solution set is b + F_p. The returned
/// solution is the lexicographically least one, i.e. its constant
/// coefficient is 0.
std::optional<Fq> artin_schreier_solve(const Fq& a);

/// Every element of F_q in index order. Only for small q.
std::vector<Fq> enumerate_field(Field f);

/// Field homomorphism F_q -> F_Q given by sending z to a root of the
/// modulus of F_q inside F_Q. Requires deg F_q | deg F_Q.
class FieldEmbedding {
 public:
  FieldEmbedding(Field from, Field to);

  Field source() const noexcept { return from_; }
  Field target() const noexcept { return to_; }
  const Fq& image_of_generator() const noexcept { return generator_image_; }

  Fq operator()(const Fq& a) const;

  /// outer after inner; requires inner.target() == outer.source().
  static FieldEmbedding compose(const FieldEmbedding& outer, const FieldEmbedding& inner);

 private:
  FieldEmbedding(Field from, Field to, Fq generator_image);
  void fill_powers();

  Field from_;
  Field to_;
  Fq generator_image_;
  std::vector<Fq> powers_;  // images of z^0 .. z^{e-1}
};

}  // namespace pcov
