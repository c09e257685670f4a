#include "pcovers/curves/elliptic.hpp"

namespace pcov {

std::vector<EllipticReport> scan_curves_serial(int p) {
  (void)EllipticCurve(p, 1, 0);
  std::vector<EllipticReport> out;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      if (EllipticCurve::is_nonsingular(p, a, b)) out.push_back(elliptic_verdict(EllipticCurve(p, a, b)));
  return out;
}

}  // namespace pcov
