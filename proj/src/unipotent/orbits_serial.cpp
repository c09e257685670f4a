#include <deque>
#include <limits>

#include "pcovers/unipotent/orbits.hpp"

namespace pcov {

OrbitReport orbit_classes_serial(int n, Field f) {
  const std::uint64_t total = orbit_universe_size(n, f);
  const auto gens = unipotent_generators(n, f);
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

  std::vector<std::uint32_t> label(total, kUnseen);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t seed = 0; seed < total; ++seed) {
    if (label[seed] != kUnseen) continue;
    // Seeds are visited in increasing order, so the seed is the least index.
    label[seed] = seed;
    queue.push_back(seed);
    while (!queue.empty()) {
      const std::uint32_t cur = queue.front();
      queue.pop_front();
      const auto m = matrix_from_index(n, f, cur);
      for (const auto& g : gens) {
        const auto next = static_cast<std::uint32_t>(matrix_index(p_conjugate(g, m)));
        if (label[next] == kUnseen) {
          label[next] = seed;
          queue.push_back(next);
        }
      }
    }
  }
  return orbit_report_from_labels(n, f, label);
}

}  // namespace pcov
