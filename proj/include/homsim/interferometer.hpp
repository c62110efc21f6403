#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "homsim/rng.hpp"
#include "homsim/types.hpp"

namespace homsim {

/// How the dephasing average is taken when a pair interferes.
/// Ensemble: the Wiener phase average enters the cross term analytically.
/// Trajectory: explicit phase increments are drawn from each photon's
/// phase_seed; agrees with Ensemble in expectation.
enum class InterferenceMode { Ensemble, Trajectory };

/// A photon at one of the two input ports of the recombining beam splitter.
/// Port 0 is the short arm, port 1 the long (delayed) arm.
struct BsArrival {
    double arrival_ns = 0.0;
    double origin_ns = 0.0;  // wavepacket origin after the arm delay
    bool zpl = true;
    double freq_offset_ghz = 0.0;
    std::uint64_t phase_seed = 0;
    std::int64_t pulse_index = -1;
    std::uint64_t source_index = 0;  // index in the emission stream
};

/// A detector-bound click before detector response is applied.
struct BsClick {
    std::uint8_t channel = 0;
    double time_ns = 0.0;
};

/// Splits the stream 50/50 onto the two interferometer arms, applies arm
/// transmissions and excess loss as Bernoulli survival, and delays the long
/// arm by delta_t. Input must be sorted by emit_time; outputs are sorted.
std::pair<std::vector<BsArrival>, std::vector<BsArrival>> route_hom(
    const std::vector<PhotonEmission>& photons, const InterferometerParams& ifo,
    std::uint64_t seed);

/// Joint detection channels for two photons meeting at the beam splitter,
/// one per input port. The click times are the (already sampled) envelope
/// draws carried by the arrivals; the channel pair is drawn from the
/// two-photon output law of a lossless splitter with amplitudes
/// (sqrt(R), sqrt(T)) conditioned on those times. Photons that do not
/// interfere (non-overlapping wavepackets, zpl = false, orthogonal
/// polarization, or arrivals further apart than window_ns) route
/// independently.
struct PairOutcome {
    std::uint8_t channel_a = 0;
    double time_a = 0.0;
    std::uint8_t channel_b = 0;
    double time_b = 0.0;
    bool interfered = false;
};

PairOutcome interfere_pair(const BsArrival& a, const BsArrival& b,
                           const InterferometerParams& ifo, const EmitterParams& emitter,
                           InterferenceMode mode, double window_ns, CounterRng& rng);

/// Routes one unpaired photon through the splitter: reflect/transmit only.
/// Returns false if the photon is lost to the splitter deficit (1 - R - T).
bool route_single(const BsArrival& p, bool long_arm, const InterferometerParams& ifo,
                  CounterRng& rng, BsClick& out);

/// Pairs cross-port arrivals and produces the click list for both
/// detectors. With slot_period_ns > 0 (pulsed operation) partners must
/// share the pulse slot of their wavepacket origins; otherwise the greedy
/// nearest arrival within window_ns is used (CW). Deterministic in
/// (inputs, seed).
std::vector<BsClick> interfere_streams(const std::vector<BsArrival>& port_short,
                                       const std::vector<BsArrival>& port_long,
                                       const InterferometerParams& ifo,
                                       const EmitterParams& emitter, InterferenceMode mode,
                                       double window_ns, std::uint64_t seed,
                                       double slot_period_ns = 0.0);

}  // namespace homsim
