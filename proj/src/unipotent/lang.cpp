#include "pcovers/unipotent/lang.hpp"

#include <string>
#include <vector>

#include "pcovers/errors.hpp"

namespace pcov {

UnipotentMatrix<Fq> embed(const FieldEmbedding& phi, const UnipotentMatrix<Fq>& m) {
  std::vector<Fq> out;
  out.reserve(m.entries().size());
  for (const Fq& a : m.entries()) out.push_back(phi(a));
  return UnipotentMatrix<Fq>(m.dim(), RingKind::kFiniteField, std::move(out));
}

LangSection lang_section(const UnipotentMatrix<Fq>& m) {
  if (m.ring() != RingKind::kFiniteField) throw UsageError("lang_section needs a matrix over F_q");
  const Field base = m.field();
  const int p = base.characteristic();
  const int e = base.degree();
  const int n = m.dim();

  int s = 1;
  FieldEmbedding phi(base, base);
  UnipotentMatrix<Fq> me = m;
  UnipotentMatrix<Fq> b = UnipotentMatrix<Fq>::identity(n, RingKind::kFiniteField, base.zero());

  for (int d = 1; d < n; ++d) {
    for (int i = 0; i + d < n; ++i) {
      const int j = i + d;
      for (;;) {
        Fq rhs = me.at(i, j);
        for (int k = i + 1; k < j; ++k) rhs += me.at(i, k) * b.at(k, j);
        if (const auto sol = artin_schreier_solve(rhs)) {
          b.at(i, j) = *sol;
          break;
        }
        if (e * s * p > Field::kMaxDegree)
          throw UsageError("lang_section would need a field of degree " + std::to_string(e * s * p) +
                           ", above the supported maximum");
        const Field next = Field::extension(p, e * s * p);
        const FieldEmbedding step(phi.target(), next);
        b = embed(step, b);
        me = embed(step, me);
        phi = FieldEmbedding::compose(step, phi);
        s *= p;
      }
    }
  }
  return LangSection{std::move(b), s, std::move(phi)};
}

}  // namespace pcov
