#pragma once

#include <cstdint>
#include <vector>

#include "homsim/interferometer.hpp"
#include "homsim/types.hpp"

namespace homsim {

/// Detector response: Bernoulli thinning by efficiency, per-event Gaussian
/// timing jitter, quantization to 1 ps, and per-channel dead-time removal.
/// Input must be sorted by time; output is sorted by timestamp.
std::vector<DetectionRecord> detect(const std::vector<BsClick>& clicks,
                                    const DetectorParams& det, std::uint64_t seed);

/// Splits a merged record list into the two per-channel streams.
std::pair<std::vector<DetectionRecord>, std::vector<DetectionRecord>> split_channels(
    const std::vector<DetectionRecord>& records);

}  // namespace homsim
