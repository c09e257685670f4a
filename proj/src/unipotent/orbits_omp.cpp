#include <numeric>

#include "pcovers/unipotent/orbits.hpp"

namespace pcov {

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

OrbitReport orbit_classes(int n, Field f) {
  const std::uint64_t total = orbit_universe_size(n, f);
  const auto size = static_cast<std::int64_t>(total);
  const auto gens = unipotent_generators(n, f);

  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0u);
  std::vector<std::uint32_t> image(total);

  for (const auto& g : gens) {
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < size; ++idx) {
      const auto m = matrix_from_index(n, f, static_cast<std::uint64_t>(idx));
      image[static_cast<std::size_t>(idx)] = static_cast<std::uint32_t>(matrix_index(p_conjugate(g, m)));
    }
    for (std::uint32_t idx = 0; idx < total; ++idx) {
      // Union by least root keeps each root the least index of its class.
      const std::uint32_t a = find_root(parent, idx);
      const std::uint32_t b = find_root(parent, image[idx]);
      if (a < b) parent[b] = a;
      else if (b < a) parent[a] = b;
    }
  }

  std::vector<std::uint32_t> label(total);
  for (std::uint32_t idx = 0; idx < total; ++idx) label[idx] = find_root(parent, idx);
  return orbit_report_from_labels(n, f, label);
}

}  // namespace pcov
