#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homsim/experiment.hpp"

namespace homsim {

enum class ScanKind { RepRate, DelayLength, CycleSeparation };

/// One grid point of a visibility scan. v_factor is the technical
/// visibility extracted by dividing the measured windowed visibility by the
/// model prediction at unit v for the same wavepacket offset.
struct ScanPoint {
    double value = 0.0;       // the scanned variable
    double visibility = 0.0;  // (A_perp - A_par) / A_perp at the analysis window
    double visibility_err = 0.0;
    double v_factor = 0.0;
    bool ok = false;
    std::string error;
};

struct ScanOptions {
    double window_ns = 26.0;  // area window for the visibility
    int k_ref_min = 2;
    int k_ref_max = 10;
    std::int64_t bin_width_ps = 100;
};

/// Runs simulate -> correlate -> peak areas -> visibility for each grid
/// point, for parallel and orthogonal polarization. Per-point seeds are
/// derived from (seed, point index), so results do not depend on
/// scheduling. Failed points carry ok = false and an error message.
///
/// RepRate: grid in MHz, pulse period varies against a fixed delay line.
/// DelayLength: grid in ns, the pulse period tracks the delay.
/// CycleSeparation: grid in fluorescence cycles m >= 1; the delay is
/// m periods at fixed repetition rate.
std::vector<ScanPoint> run_scan(ScanKind kind, const std::vector<double>& grid,
                                const ExperimentConfig& base, std::uint64_t seed,
                                const ScanOptions& options = {});

std::string scan_csv(const std::vector<ScanPoint>& points, const std::string& variable_name);

}  // namespace homsim
