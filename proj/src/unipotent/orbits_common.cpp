#include <map>
#include <string>

#include "pcovers/errors.hpp"
#include "pcovers/unipotent/orbits.hpp"

namespace pcov {

std::uint64_t orbit_universe_size(int n, Field f) {
  if (n < UnipotentMatrix<Fq>::kMinDim || n > UnipotentMatrix<Fq>::kMaxDim)
    throw UsageError("matrix dimension must be in [2, 6], got " + std::to_string(n));
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < UnipotentMatrix<Fq>::entry_count(n); ++k) {
    total *= q;
    if (total > kMaxOrbitUniverse)
      throw UsageError("U_" + std::to_string(n) + "(F_" + std::to_string(q) + ") has more than " +
                       std::to_string(kMaxOrbitUniverse) + " elements");
  }
  return total;
}

std::uint64_t matrix_index(const UnipotentMatrix<Fq>& m) {
  const std::uint64_t q = m.field().order();
  std::uint64_t idx = 0;
  const auto& e = m.entries();
  for (std::size_t k = e.size(); k-- > 0;) idx = idx * q + e[k].index();
  return idx;
}

UnipotentMatrix<Fq> matrix_from_index(int n, Field f, std::uint64_t index) {
  const std::uint64_t q = f.order();
  std::vector<Fq> e;
  for (std::size_t k = 0; k < UnipotentMatrix<Fq>::entry_count(n); ++k) {
    e.push_back(f.from_index(index % q));
    index /= q;
  }
  return UnipotentMatrix<Fq>(n, RingKind::kFiniteField, std::move(e));
}

std::vector<UnipotentMatrix<Fq>> unipotent_generators(int n, Field f) {
  std::vector<UnipotentMatrix<Fq>> gens;
  Fq zk = f.one();
  for (int k = 0; k < f.degree(); ++k, zk *= f.generator())
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) gens.push_back(UnipotentMatrix<Fq>::elementary(n, RingKind::kFiniteField, i, j, zk));
  return gens;
}

OrbitReport orbit_report_from_labels(int n, Field f, const std::vector<std::uint32_t>& label) {
  std::map<std::uint32_t, std::uint64_t> sizes;
  for (std::uint32_t l : label) ++sizes[l];
  OrbitReport r;
  r.n = n;
  r.q = f.order();
  r.class_count = sizes.size();
  for (const auto& [rep, size] : sizes) {
    r.representatives.push_back(matrix_from_index(n, f, rep));
    r.class_sizes.push_back(size);
  }
  return r;
}

}  // namespace pcov
