#pragma once

#include <variant>
#include <vector>

#include "pcovers/curves/elliptic.hpp"
#include "pcovers/unipotent/matrix.hpp"

namespace pcov {

/// P^1 marked at t = 0; the global ring is k[t^-1].
struct P1Model {
  Field field;
};

using CurveModel = std::variant<P1Model, EllipticCurve>;

using SeriesMatrix = UnipotentMatrix<LaurentSeries>;

struct GlobalReduction {
  /// Conjugator with p_conjugate(b, M) = m_prime.
  SeriesMatrix b;
  /// Entries in the model's global ring.
  SeriesMatrix m_prime;
  /// Elliptic model only: the global function behind each upper entry of
  /// m_prime, row-major.
  std::vector<GlobalCombination> combinations;
};

/// Conjugates M into U_n(O(Y')) by sweeping diagonals d = 1..n-1.
///
/// Each entry f is split as f = wp(b) + h and the elementary conjugator
/// I - b E_ij turns that entry into h. It only touches entries on diagonal d
/// or higher in row i and column j, so finished entries stay finished. The
/// result is verified before returning (IntegrityError otherwise).
///
/// For an elliptic curve with alpha = 1 this throws RefusalError carrying
/// the first entry whose H^1 obstruction is nonzero.
GlobalReduction reduce_matrix_global(const CurveModel& model, const SeriesMatrix& m);

struct ProbeVerdict {
  /// b lies in the global ring up to an additive constant.
  bool affirmative;
  /// Elliptic model: the H^1 class of b (nonzero exactly when b is not
  /// global but wp(b) is).
  int h1_class;
};

/// Given b with wp(b) global, decides whether b is global. Throws
/// UsageError when wp(b) is not global to the precision of b.
ProbeVerdict injectivity_probe(const CurveModel& model, const LaurentSeries& b);

/// Whether s lies in the model's global ring to its precision.
bool is_global_in(const CurveModel& model, const LaurentSeries& s);

}  // namespace pcov
