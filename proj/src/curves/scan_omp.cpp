#include <exception>
#include <optional>

#include "pcovers/curves/elliptic.hpp"

namespace pcov {

std::vector<EllipticReport> scan_curves(int p) {
  // Validate p once outside the parallel region.
  (void)EllipticCurve(p, 1, 0);
  const long cells = static_cast<long>(p) * p;
  std::vector<std::optional<EllipticReport>> slot(static_cast<std::size_t>(cells));
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 4)
  for (long cell = 0; cell < cells; ++cell) {
    const int a = static_cast<int>(cell / p);
    const int b = static_cast<int>(cell % p);
    if (!EllipticCurve::is_nonsingular(p, a, b)) continue;
    try {
      slot[static_cast<std::size_t>(cell)] = elliptic_verdict(EllipticCurve(p, a, b));
    } catch (...) {
#pragma omp critical(pcov_scan_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<EllipticReport> out;
  for (auto& s : slot)
    if (s) out.push_back(*s);
  return out;
}

}  // namespace pcov
