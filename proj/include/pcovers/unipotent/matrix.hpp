#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcovers/errors.hpp"
#include "pcovers/unipotent/ring_traits.hpp"

namespace pcov {

/// An element of U_n(R): upper triangular with unit diagonal.
///
/// Only the n(n-1)/2 strictly upper entries are stored, row-major. Indices
/// are 0-based here; the JSON encoding uses 1-based "i,j" keys. The
/// diagonal index of entry (i, j) is d = j - i; a "smaller" diagonal is one
/// closer to the main diagonal.
template <class R>
class UnipotentMatrix {
 public:
  static constexpr int kMinDim = 2;
  static constexpr int kMaxDim = 6;

  UnipotentMatrix(int n, RingKind ring, std::vector<R> upper) : n_(n), ring_(ring), e_(std::move(upper)) {
    if (n < kMinDim || n > kMaxDim) throw UsageError("matrix dimension must be in [2, 6], got " + std::to_string(n));
    if (e_.size() != entry_count(n)) throw UsageError("wrong number of upper entries for dimension " + std::to_string(n));
    for (const R& x : e_) {
      if (!(x.field() == e_.front().field())) throw UsageError("matrix entries over different fields");
      if (!kind_fits(x, ring)) throw UsageError(std::string("entry does not belong to ring ") + ring_name(ring));
    }
  }

  static UnipotentMatrix identity(int n, RingKind ring, const R& zero) {
    return UnipotentMatrix(n, ring, std::vector<R>(entry_count(n), zero_like(zero)));
  }

  /// Identity plus `value` at (i, j).
  static UnipotentMatrix elementary(int n, RingKind ring, int i, int j, const R& value) {
    UnipotentMatrix m = identity(n, ring, value);
    m.at(i, j) = value;
    return m;
  }

  static constexpr std::size_t entry_count(int n) { return static_cast<std::size_t>(n * (n - 1) / 2); }

  int dim() const noexcept { return n_; }
  RingKind ring() const noexcept { return ring_; }
  Field field() const { return e_.front().field(); }
  int characteristic() const { return field().characteristic(); }

  const R& at(int i, int j) const { return e_[offset(i, j)]; }
  R& at(int i, int j) { return e_[offset(i, j)]; }
  const std::vector<R>& entries() const noexcept { return e_; }

  /// Relabel the coefficient ring, e.g. view a global matrix as Laurent.
  UnipotentMatrix with_ring(RingKind ring) const { return UnipotentMatrix(n_, ring, e_); }

  std::size_t offset(int i, int j) const {
    if (i < 0 || j >= n_ || i >= j) throw UsageError("index outside the strictly upper triangle");
    return static_cast<std::size_t>(i * n_ - i * (i + 1) / 2 + (j - i - 1));
  }

 private:
  int n_;
  RingKind ring_;
  std::vector<R> e_;
};

namespace detail {

inline RingKind common_ring(RingKind a, RingKind b) {
  if (a == b) return a;
  const bool a_series = a != RingKind::kFiniteField;
  const bool b_series = b != RingKind::kFiniteField;
  if (a_series && b_series && (a == RingKind::kLaurent || b == RingKind::kLaurent)) return RingKind::kLaurent;
  throw UsageError(std::string("ring mismatch: ") + ring_name(a) + " vs " + ring_name(b));
}

template <class R>
RingKind check_compatible(const UnipotentMatrix<R>& a, const UnipotentMatrix<R>& b) {
  if (a.dim() != b.dim()) throw UsageError("matrix dimension mismatch");
  if (!(a.field() == b.field())) throw UsageError("matrix field mismatch");
  return common_ring(a.ring(), b.ring());
}

}  // namespace detail

/// W Z; the (i, j) entry is w_ij + z_ij + sum_{i<k<j} w_ik z_kj.
template <class R>
UnipotentMatrix<R> umul(const UnipotentMatrix<R>& w, const UnipotentMatrix<R>& z) {
  const RingKind ring = detail::check_compatible(w, z);
  const int n = w.dim();
  std::vector<R> out;
  out.reserve(UnipotentMatrix<R>::entry_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      R acc = w.at(i, j) + z.at(i, j);
      for (int k = i + 1; k < j; ++k) acc += w.at(i, k) * z.at(k, j);
      out.push_back(std::move(acc));
    }
  return UnipotentMatrix<R>(n, ring, std::move(out));
}

/// W^{-1} by back-substitution: v_ij = -w_ij - sum_{i<k<j} w_ik v_kj.
template <class R>
UnipotentMatrix<R> uinv(const UnipotentMatrix<R>& w) {
  const int n = w.dim();
  UnipotentMatrix<R> v = w;
  for (int d = 1; d < n; ++d)
    for (int i = 0; i + d < n; ++i) {
      const int j = i + d;
      R acc = w.at(i, j);
      for (int k = i + 1; k < j; ++k) acc += w.at(i, k) * v.at(k, j);
      v.at(i, j) = -acc;
    }
  return v;
}

template <class R>
UnipotentMatrix<R> frobenius_entrywise(const UnipotentMatrix<R>& m) {
  std::vector<R> out;
  out.reserve(m.entries().size());
  for (const R& x : m.entries()) out.push_back(frobenius(x));
  return UnipotentMatrix<R>(m.dim(), m.ring(), std::move(out));
}

/// The Lang map B -> B^(p) B^{-1}.
template <class R>
UnipotentMatrix<R> lang_map(const UnipotentMatrix<R>& b) {
  return umul(frobenius_entrywise(b), uinv(b));
}

/// C^(p) M C^{-1}; a left action of U_n(R) on itself.
template <class R>
UnipotentMatrix<R> p_conjugate(const UnipotentMatrix<R>& c, const UnipotentMatrix<R>& m) {
  return umul(umul(frobenius_entrywise(c), m), uinv(c));
}

/// Entrywise equality (to precision for series rings).
template <class R>
bool agrees(const UnipotentMatrix<R>& a, const UnipotentMatrix<R>& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    if (!agrees(a.entries()[k], b.entries()[k])) return false;
  return true;
}

/// m_ij - wp(b_ij) - m'_ij where M = p_conjugate(B, M'). This is the
/// correction term, which depends only on entries of B and M' on diagonals
/// smaller than j - i.
template <class R>
R correction_residual(const UnipotentMatrix<R>& b, const UnipotentMatrix<R>& m_prime, int i, int j) {
  const UnipotentMatrix<R> m = p_conjugate(b, m_prime);
  return m.at(i, j) - wp_of(b.at(i, j)) - m_prime.at(i, j);
}

/// Checks that for every (i, j) on diagonal d the correction residual is
/// unchanged when all entries of B and M' on diagonals >= d are replaced by
/// random ring elements drawn from `random_entry`.
template <class R>
bool entry_correction_check(const UnipotentMatrix<R>& b, const UnipotentMatrix<R>& m_prime, int d,
                            const std::function<R()>& random_entry, int trials = 8) {
  const int n = b.dim();
  if (d < 1 || d > n - 1) throw UsageError("diagonal index out of range");
  detail::check_compatible(b, m_prime);
  for (int i = 0; i + d < n; ++i) {
    const int j = i + d;
    const R base = correction_residual(b, m_prime, i, j);
    for (int t = 0; t < trials; ++t) {
      UnipotentMatrix<R> b2 = b;
      UnipotentMatrix<R> m2 = m_prime;
      for (int r = 0; r < n; ++r)
        for (int c = r + d; c < n; ++c) {
          b2.at(r, c) = random_entry();
          m2.at(r, c) = random_entry();
        }
      if (!agrees(correction_residual(b2, m2, i, j), base)) return false;
    }
  }
  return true;
}

/// Decides whether M = C^(p) M' C^{-1} for some C in U_n(R) and returns such
/// a C.
///
/// Diagonals are swept in increasing order. For (i, j) the relation
/// M C = C^(p) M' gives
///   wp(c_ij) = m_ij - m'_ij + sum_{i<k<j} (m_ik c_kj - c_ik^p m'_kj),
/// whose right side only involves already-chosen entries. Each solution is
/// determined up to F_p, and those choices feed later corrections, so the
/// search branches over them in ascending order and returns the first
/// success. Supported rings: finite fields and Laurent series.
template <class R>
std::optional<UnipotentMatrix<R>> p_equiv_decide(const UnipotentMatrix<R>& m, const UnipotentMatrix<R>& m_prime) {
  const RingKind ring = detail::check_compatible(m, m_prime);
  if (ring != RingKind::kFiniteField && ring != RingKind::kLaurent)
    throw UsageError(std::string("p-equivalence is decided over F_q or k((t)) only, not ") + ring_name(ring));
  const int n = m.dim();
  const int p = m.characteristic();

  std::vector<std::pair<int, int>> order;
  for (int d = 1; d < n; ++d)
    for (int i = 0; i + d < n; ++i) order.emplace_back(i, i + d);

  UnipotentMatrix<R> c = UnipotentMatrix<R>::identity(n, ring, m.entries().front());

  std::function<bool(std::size_t)> search = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return agrees(p_conjugate(c, m_prime), m);
    const auto [i, j] = order[pos];
    R rhs = m.at(i, j) - m_prime.at(i, j);
    for (int k = i + 1; k < j; ++k) rhs += m.at(i, k) * c.at(k, j) - frobenius(c.at(i, k)) * m_prime.at(k, j);
    const auto sol = wp_solve(rhs);
    if (!sol) return false;
    // The corner entry feeds no later correction.
    const int branches = (pos + 1 == order.size()) ? 1 : p;
    for (int lambda = 0; lambda < branches; ++lambda) {
      c.at(i, j) = *sol + constant_like(*sol, lambda);
      if (search(pos + 1)) return true;
    }
    return false;
  };

  if (!search(0)) return std::nullopt;
  return c;
}

/// The classical Artin-Schreier parameter of a 2x2 datum: the algebra
/// x^p - x = parameter.
template <class R>
struct ArtinSchreierDatum {
  R parameter;
};

template <class R>
ArtinSchreierDatum<R> as_polynomial_n2(const UnipotentMatrix<R>& m) {
  if (m.dim() != 2) throw UsageError("as_polynomial_n2 needs a 2x2 matrix");
  return {m.at(0, 1)};
}

/// The algebra splits iff the parameter lies in wp(R).
template <class R>
bool is_split(const ArtinSchreierDatum<R>& d) {
  return wp_solve(d.parameter).has_value();
}

/// Classical criterion: the two algebras agree iff the parameters differ by
/// an element of wp(R).
template <class R>
bool classically_equivalent(const ArtinSchreierDatum<R>& a, const ArtinSchreierDatum<R>& b) {
  return wp_solve(a.parameter - b.parameter).has_value();
}

}  // namespace pcov
