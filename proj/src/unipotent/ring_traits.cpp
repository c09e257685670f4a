#include "pcovers/unipotent/ring_traits.hpp"

namespace pcov {

const char* ring_name(RingKind r) noexcept {
  switch (r) {
    case RingKind::kFiniteField:
      return "fq";
    case RingKind::kGlobalP1:
      return "p1";
    case RingKind::kLaurent:
      return "laurent";
    case RingKind::kEllipticGlobal:
      return "elliptic";
  }
  return "unknown";
}

}  // namespace pcov
