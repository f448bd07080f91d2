#ifndef NS_SWEEP_HPP
#define NS_SWEEP_HPP

// Verification sweeps. Specs are independent, so the parallel path fans out
// across them with OpenMP; results land in spec order either way, keeping
// output deterministic. The serial path is the reference the benchmark and
// the tests compare against.

#include "families.hpp"

namespace nsg {

std::vector<DiscrepancyReport> run_verifications(
    const std::vector<FamilySpec>& specs, bool parallel);

} // namespace nsg

#endif
