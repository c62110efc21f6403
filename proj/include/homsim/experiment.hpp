#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "homsim/detector.hpp"
#include "homsim/interferometer.hpp"
#include "homsim/types.hpp"

namespace homsim {

enum class Topology { Hbt, Hom };

/// Full experiment description: emitter + pump + interferometer + detectors.
struct ExperimentConfig {
    Topology topology = Topology::Hom;
    EmitterParams emitter;
    PumpParams pump;
    InterferometerParams interferometer;
    DetectorParams detector;
    double duration_ns = 0.0;  // CW acquisition time
    InterferenceMode mode = InterferenceMode::Ensemble;
    double window_tau1_multiple = 10.0;  // interference pairing window, in units of tau1

    double duration_or_pulses() const {
        return pump.mode == PumpMode::Cw ? duration_ns : static_cast<double>(pump.n_pulses);
    }
    double window_ns() const { return window_tau1_multiple * emitter.tau1_ns; }
    void validate() const;
};

struct ExperimentResult {
    std::vector<DetectionRecord> channel0;
    std::vector<DetectionRecord> channel1;
    std::uint64_t n_emitted = 0;
};

/// End-to-end run: emission -> interferometer -> detectors. HBT blocks the
/// long arm, so photons never meet at the splitter. Deterministic in
/// (config, seed).
ExperimentResult run_experiment_detailed(const ExperimentConfig& config, std::uint64_t seed);

/// As above, returning just the two per-detector streams.
std::pair<std::vector<DetectionRecord>, std::vector<DetectionRecord>> run_experiment(
    const ExperimentConfig& config, std::uint64_t seed);

}  // namespace homsim
