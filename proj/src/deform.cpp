#include "qrep/deform.hpp"

namespace qrep {

std::string verdict_name(UdrVerdict v) {
  switch (v) {
    case UdrVerdict::isomorphic_to_k: return "IsomorphicToK";
    case UdrVerdict::quotient_of_power_series: return "QuotientOfPowerSeries";
    case UdrVerdict::no_universal_ring_guaranteed: return "NoUniversalRingGuaranteed";
  }
  return "?";
}

std::string UdrReport::verdict_text() const {
  if (verdict == UdrVerdict::quotient_of_power_series)
    return verdict_name(verdict) + "(" + std::to_string(ext_dim) + ")";
  return verdict_name(verdict);
}

UdrReport make_udr_report(std::size_t end_dim, std::size_t ext_dim) {
  UdrReport r{end_dim, ext_dim, end_dim == 1, UdrVerdict::no_universal_ring_guaranteed};
  if (r.has_universal_ring)
    r.verdict = ext_dim == 0 ? UdrVerdict::isomorphic_to_k : UdrVerdict::quotient_of_power_series;
  return r;
}

}  // namespace qrep
