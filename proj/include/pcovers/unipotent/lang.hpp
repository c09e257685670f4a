#pragma once

#include "pcovers/arith/field.hpp"
#include "pcovers/unipotent/matrix.hpp"

namespace pcov {

/// Image of a matrix under a field embedding, entry by entry.
UnipotentMatrix<Fq> embed(const FieldEmbedding& phi, const UnipotentMatrix<Fq>& m);

struct LangSection {
  /// Preimage of M under the Lang map, over F_{q^s}.
  UnipotentMatrix<Fq> b;
  /// The degree of the extension F_{q^s} / F_q; a power of p.
  int s;
  /// F_q -> F_{q^s}, so that lang_map(b) == embed(embedding, M).
  FieldEmbedding embedding;
};

/// Finds B with B^(p) B^{-1} = M.
///
/// B^(p) = M B read entrywise gives wp(b_ij) = m_ij + sum_{i<k<j} m_ik b_kj,
/// solved diagonal by diagonal. When the trace of the right side is nonzero
/// the working field is replaced by the extension of degree p over it, in
/// which the trace vanishes. Throws UsageError if the total degree would
/// exceed Field::kMaxDegree.
LangSection lang_section(const UnipotentMatrix<Fq>& m);

}  // namespace pcov
