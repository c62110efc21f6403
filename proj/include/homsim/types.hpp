#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homsim {

// Unit conventions: times in ns, rates in ns^-1, detector timestamps in
// integer ps, frequency offsets in GHz, model frequency outputs in MHz.

inline constexpr double kPsPerNs = 1000.0;

inline std::int64_t to_ps(double t_ns) {
    return static_cast<std::int64_t>(std::llround(t_ns * kPsPerNs));
}

struct EmitterParams {
    double tau1_ns = 4.0;               // excited-state lifetime
    double gamma_star_per_ns = 0.0;     // pure dephasing rate; adds gamma_star/pi to the FWHM
    double alpha_zpl = 1.0;             // fraction of photons in the interfering line
    double diffusion_sigma_mhz = 0.0;   // spectral-diffusion RMS
    double diffusion_tau_ns = 1000.0;   // spectral-diffusion correlation time
    double background_rate_per_ns = 0.0;

    void validate() const;
};

enum class PumpMode { Cw, Pulsed };

struct PumpParams {
    PumpMode mode = PumpMode::Pulsed;
    double saturation_s = 0.2;      // CW only
    double rep_rate_mhz = 24.79;    // pulsed only
    std::uint64_t n_pulses = 0;     // pulsed only
    double p_excite = 1.0;          // pulsed only

    double period_ns() const { return 1.0e3 / rep_rate_mhz; }
    /// CW pump rate k_p = s / (2 tau1).
    double pump_rate_per_ns(double tau1_ns) const { return saturation_s / (2.0 * tau1_ns); }
    void validate() const;
};

struct InterferometerParams {
    double delta_t_ns = 40.33;   // long-arm delay
    double r2 = 0.5;             // BS intensity reflectance
    double t2 = 0.5;             // BS intensity transmittance
    double excess_loss = 0.0;
    double pol_angle_rad = 0.0;  // 0 = parallel, pi/2 = orthogonal
    double arm_transmissions[2] = {1.0, 1.0};  // [short, long]

    void validate() const;
};

struct DetectorParams {
    double efficiency = 1.0;
    double jitter_sigma_ps = 0.0;  // per-detector Gaussian timing jitter
    double dead_time_ns = 0.0;

    void validate() const;
};

/// One emitted photon. excite_time is the wavepacket origin; emit_time is
/// the temporal position drawn from the exponential envelope.
struct PhotonEmission {
    double emit_time_ns = 0.0;
    double excite_time_ns = 0.0;
    bool zpl = true;
    double freq_offset_ghz = 0.0;
    std::uint64_t phase_seed = 0;
    std::int64_t pulse_index = -1;  // -1 for CW / background
};

struct DetectionRecord {
    std::uint8_t channel = 0;     // detector id, 0 or 1
    std::int64_t timestamp_ps = 0;

    friend bool operator==(const DetectionRecord&, const DetectionRecord&) = default;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void EmitterParams::validate() const {
    if (!(tau1_ns > 0.0)) throw ConfigError("emitter: tau1_ns must be > 0");
    if (gamma_star_per_ns < 0.0) throw ConfigError("emitter: gamma_star_per_ns must be >= 0");
    if (alpha_zpl < 0.0 || alpha_zpl > 1.0) throw ConfigError("emitter: alpha_zpl must be in [0,1]");
    if (diffusion_sigma_mhz < 0.0) throw ConfigError("emitter: diffusion_sigma_mhz must be >= 0");
    if (diffusion_sigma_mhz > 0.0 && !(diffusion_tau_ns > 0.0))
        throw ConfigError("emitter: diffusion_tau_ns must be > 0 when diffusion is on");
    if (background_rate_per_ns < 0.0) throw ConfigError("emitter: background_rate_per_ns must be >= 0");
}

inline void PumpParams::validate() const {
    if (mode == PumpMode::Cw) {
        if (!(saturation_s > 0.0)) throw ConfigError("pump: saturation_s must be > 0 in CW mode");
    } else {
        if (!(rep_rate_mhz > 0.0)) throw ConfigError("pump: rep_rate_mhz must be > 0 in pulsed mode");
        if (p_excite < 0.0 || p_excite > 1.0) throw ConfigError("pump: p_excite must be in [0,1]");
    }
}

inline void InterferometerParams::validate() const {
    if (!(delta_t_ns > 0.0)) throw ConfigError("interferometer: delta_t_ns must be > 0");
    if (r2 < 0.0 || t2 < 0.0 || r2 + t2 > 1.0 + 1e-12)
        throw ConfigError("interferometer: need r2, t2 >= 0 and r2 + t2 <= 1");
    if (excess_loss < 0.0 || excess_loss >= 1.0)
        throw ConfigError("interferometer: excess_loss must be in [0,1)");
    for (double a : arm_transmissions)
        if (a < 0.0 || a > 1.0) throw ConfigError("interferometer: arm transmissions must be in [0,1]");
}

inline void DetectorParams::validate() const {
    if (efficiency < 0.0 || efficiency > 1.0) throw ConfigError("detector: efficiency must be in [0,1]");
    if (jitter_sigma_ps < 0.0) throw ConfigError("detector: jitter_sigma_ps must be >= 0");
    if (dead_time_ns < 0.0) throw ConfigError("detector: dead_time_ns must be >= 0");
}

}  // namespace homsim
