#pragma once

#include <cstdint>

#include "setq/oracle.hpp"
#include "setq/quantum.hpp"

namespace setq {

// Deterministic full scan: queries all 2n values, compares image sets
// exactly. Always correct on promise-satisfying instances.
RunResult classical_scan_set_equality(const SetEqualityInstance& inst);

// Birthday baseline for injective oracles: ceil(c sqrt n) sampled positions
// per side (with replacement), Equal iff the sampled image sets intersect.
// One-sided: Disjoint is never misreported. Degenerates to the full scan
// once ceil(c sqrt n) >= n, so queries are capped at 2n.
RunResult classical_birthday_one_to_one(const SetEqualityInstance& inst, double c,
                                        std::uint64_t seed);

}  // namespace setq
