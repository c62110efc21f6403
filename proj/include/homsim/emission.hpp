#pragma once

#include <cstdint>
#include <vector>

#include "homsim/types.hpp"

namespace homsim {

/// Monte Carlo photon stream from a dephased two-level emitter.
///
/// CW: renewal process, Exp(1/k_p) pump wait followed by Exp(tau1) emission
/// delay, over [0, duration_ns). Pulsed: per trigger, one photon with
/// probability p_excite at trigger + Exp(tau1). Uncorrelated background is
/// superposed as a Poisson process with zpl = false. Generation is
/// block-parallel with one counter-based stream per block, so the result
/// depends only on (params, seed).
std::vector<PhotonEmission> simulate_emission(const EmitterParams& emitter,
                                              const PumpParams& pump,
                                              double duration_or_pulses,
                                              std::uint64_t seed);

}  // namespace homsim
