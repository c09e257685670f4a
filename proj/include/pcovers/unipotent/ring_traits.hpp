#pragma once

#include <optional>

#include "pcovers/arith/field.hpp"
#include "pcovers/series/artin_schreier.hpp"
#include "pcovers/series/laurent.hpp"

// Uniform access to the coefficient rings a UnipotentMatrix may live over.
namespace pcov {

enum class RingKind {
  kFiniteField,     // F_q
  kGlobalP1,        // k[t^-1] inside k((t))
  kLaurent,         // k((t))
  kEllipticGlobal,  // O(E - O) inside k((t)), as truncated expansions
};

const char* ring_name(RingKind r) noexcept;

inline int characteristic_of(const Fq& a) { return a.characteristic(); }
inline int characteristic_of(const LaurentSeries& a) { return a.field().characteristic(); }

inline Fq zero_like(const Fq& a) { return a.field().zero(); }
inline LaurentSeries zero_like(const LaurentSeries& a) { return LaurentSeries::zero(a.field()); }

/// The prime-field constant k, in the ring of a.
inline Fq constant_like(const Fq& a, int k) { return a.field().from_int(k); }
inline LaurentSeries constant_like(const LaurentSeries& a, int k) {
  return LaurentSeries::constant(a.field().from_int(k));
}

inline bool agrees(const Fq& a, const Fq& b) { return a == b; }

/// The ring's solver for x^p - x = a.
inline std::optional<Fq> wp_solve(const Fq& a) { return artin_schreier_solve(a); }
inline std::optional<LaurentSeries> wp_solve(const LaurentSeries& a) { return wp_solve_local(a); }

inline Fq wp_of(const Fq& a) { return frobenius(a) - a; }
inline LaurentSeries wp_of(const LaurentSeries& a) { return wp_apply(a); }

inline bool kind_fits(const Fq&, RingKind r) { return r == RingKind::kFiniteField; }
inline bool kind_fits(const LaurentSeries& a, RingKind r) {
  if (r == RingKind::kFiniteField) return false;
  if (r == RingKind::kGlobalP1) return GlobalP1Element::is_global(a);
  return true;
}

}  // namespace pcov
