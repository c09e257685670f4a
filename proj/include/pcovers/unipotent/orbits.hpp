#pragma once

#include <cstdint>
#include <vector>

#include "pcovers/arith/field.hpp"
#include "pcovers/unipotent/matrix.hpp"

namespace pcov {

/// Partition of U_n(F_q) into orbits of M -> C^(p) M C^{-1}.
struct OrbitReport {
  int n = 0;
  std::uint64_t q = 0;
  std::uint64_t class_count = 0;
  /// The member of least index in each class, ordered by that index.
  std::vector<UnipotentMatrix<Fq>> representatives;
  std::vector<std::uint64_t> class_sizes;
};

/// Largest q^{n(n-1)/2} accepted by the orbit enumerators.
inline constexpr std::uint64_t kMaxOrbitUniverse = 1'000'000;

/// Matrices are numbered by reading the upper entries row-major as base-q
/// digits, first entry least significant, each digit being Fq::index().
std::uint64_t matrix_index(const UnipotentMatrix<Fq>& m);
UnipotentMatrix<Fq> matrix_from_index(int n, Field f, std::uint64_t index);

/// Union-find over generator images. Images for each generator are computed
/// in an OpenMP parallel loop.
OrbitReport orbit_classes(int n, Field f);

/// Single-threaded breadth-first closure; the reference for orbit_classes.
OrbitReport orbit_classes_serial(int n, Field f);

/// The generators I + z^k E_ij of U_n(F_q) as a group.
std::vector<UnipotentMatrix<Fq>> unipotent_generators(int n, Field f);

/// q^{n(n-1)/2}, after checking it against kMaxOrbitUniverse.
std::uint64_t orbit_universe_size(int n, Field f);

/// Builds the report from a class label per index (label = least index of
/// the class).
OrbitReport orbit_report_from_labels(int n, Field f, const std::vector<std::uint32_t>& label);

}  // namespace pcov
