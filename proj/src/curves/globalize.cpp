#include "pcovers/curves/globalize.hpp"

#include <string>

#include "pcovers/errors.hpp"
#include "pcovers/series/artin_schreier.hpp"

namespace pcov {

namespace {

Field model_field(const CurveModel& model) {
  if (const auto* p1 = std::get_if<P1Model>(&model)) return p1->field;
  return std::get<EllipticCurve>(model).field();
}

std::string entry_name(int i, int j) { return std::to_string(i + 1) + "," + std::to_string(j + 1); }

bool elliptic_global(const EllipticCurve& e, const LaurentSeries& s) {
  const PrincipalReduction r = reduce_principal_part(e, s);
  return r.c == 0 && r.tail.is_zero();
}

// A finite precision at which to test an exact series against the elliptic
// model: past its last term and past one full t^-p reduction.
LaurentSeries finite(const EllipticCurve& e, const LaurentSeries& s) {
  if (!s.is_exact()) return s;
  return s.truncated(std::max<long>(s.last_exponent(), 0) + elliptic_split_min_precision(e));
}

}  // namespace

bool is_global_in(const CurveModel& model, const LaurentSeries& s) {
  if (const auto* e = std::get_if<EllipticCurve>(&model)) return elliptic_global(*e, finite(*e, s));
  return s.positive_part().is_zero();
}

GlobalReduction reduce_matrix_global(const CurveModel& model, const SeriesMatrix& m) {
  const Field field = model_field(model);
  if (!(m.field() == field)) throw UsageError("matrix and curve model are over different fields");
  const auto* curve = std::get_if<EllipticCurve>(&model);
  const int n = m.dim();
  const SeriesMatrix input = m.with_ring(RingKind::kLaurent);

  const bool blocked = curve != nullptr && frobenius_on_h1(*curve) == 1;

  SeriesMatrix cur = input;
  SeriesMatrix b = SeriesMatrix::identity(n, RingKind::kLaurent, LaurentSeries::zero(field));
  GlobalReduction out{b, cur, {}};
  if (curve) out.combinations.assign(SeriesMatrix::entry_count(n), GlobalCombination(curve->p()));

  for (int d = 1; d < n; ++d) {
    for (int i = 0; i + d < n; ++i) {
      const int j = i + d;
      const LaurentSeries f = cur.at(i, j);
      LaurentSeries step = LaurentSeries::zero(field);
      LaurentSeries h = LaurentSeries::zero(field);
      if (curve) {
        if (f.is_exact())
          throw UsageError("entry " + entry_name(i, j) + " must carry a finite precision for the elliptic model");
        const EllipticSplit s = split_elliptic(*curve, f);
        if (s.obstruction != 0)
          throw RefusalError("entry " + entry_name(i, j) + " has nonzero class " + std::to_string(s.obstruction) +
                                 " in H^1 and the curve has alpha = 1",
                             i + 1, j + 1, s.obstruction);
        step = s.b;
        h = evaluate(*curve, s.g, f.precision());
        out.combinations[cur.offset(i, j)] = s.g;
      } else {
        const P1Split s = split_p1(f);
        step = s.b;
        h = s.h.series();
      }
      if (step.is_zero() && agrees(f, h)) {
        cur.at(i, j) = h;
        continue;
      }
      const SeriesMatrix e = SeriesMatrix::elementary(n, RingKind::kLaurent, i, j, -step);
      cur = p_conjugate(e, cur);
      b = umul(e, b);
      if (!agrees(cur.at(i, j), h))
        throw IntegrityError("entry " + entry_name(i, j) + " did not become global after conjugation");
      cur.at(i, j) = h;
    }
  }

  if (blocked)
    throw RefusalError("the curve has alpha = 1, so wp is not surjective onto H^1; no entry carried an obstruction", 0, 0, 0);

  out.b = b;
  out.m_prime = cur.with_ring(curve ? RingKind::kEllipticGlobal : RingKind::kGlobalP1);
  if (!agrees(p_conjugate(out.b, input), out.m_prime))
    throw IntegrityError("p_conjugate(B, M) does not reproduce the reduced matrix");
  return out;
}

ProbeVerdict injectivity_probe(const CurveModel& model, const LaurentSeries& b) {
  if (!(b.field() == model_field(model))) throw UsageError("series and curve model are over different fields");
  if (const auto* e = std::get_if<EllipticCurve>(&model)) {
    const LaurentSeries bf = finite(*e, b);
    if (!elliptic_global(*e, wp_apply(bf).truncated(bf.precision())))
      throw UsageError("wp(b) is not a global function on E - O");
    const PrincipalReduction r = reduce_principal_part(*e, bf);
    return ProbeVerdict{r.c == 0 && r.tail.is_zero(), r.c};
  }
  if (!wp_apply(b).positive_part().is_zero()) throw UsageError("wp(b) is not in k[t^-1]");
  return ProbeVerdict{b.positive_part().is_zero(), 0};
}

}  // namespace pcov
