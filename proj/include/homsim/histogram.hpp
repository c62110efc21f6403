#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homsim/types.hpp"

namespace homsim {

enum class CorrelationMode { Full, StartStop };

/// Bins are centered on multiples of bin_width between tau_min and tau_max
/// (inclusive), with boundary ties rounded away from zero. Centered bins
/// make the histogram of channel-swapped input an exact mirror.
struct HistogramConfig {
    std::int64_t bin_width_ps = 100;
    std::int64_t tau_min_ps = -100000;
    std::int64_t tau_max_ps = 100000;
    CorrelationMode mode = CorrelationMode::Full;

    void validate() const;
    std::size_t n_bins() const {
        return static_cast<std::size_t>((tau_max_ps - tau_min_ps) / bin_width_ps) + 1;
    }
    std::int64_t center_ps(std::size_t bin) const {
        return tau_min_ps + static_cast<std::int64_t>(bin) * bin_width_ps;
    }
    /// Bin index for a delay, or nullopt when out of range.
    std::optional<std::size_t> bin_of(std::int64_t tau_ps) const;
};

struct HistogramMeta {
    std::uint64_t events_a = 0;
    std::uint64_t events_b = 0;
    int channel_a = -1;
    int channel_b = -1;
    std::int64_t span_ps = 0;  // acquisition span across both streams
};

struct Histogram {
    HistogramConfig cfg;
    std::vector<std::uint64_t> counts;
    std::vector<double> normalized;  // empty until normalize() was applied
    std::string norm_method;         // "none", "plateau", "peak_mean"
    double norm_divisor = 0.0;
    HistogramMeta meta;

    std::uint64_t total() const;
};

/// All-pairs (full) or nearest-subsequent-partner (start-stop) correlation
/// histogram of tau = t_b - t_a via a sliding-window merge. Streams must be
/// sorted and single-channel; identical channel ids are rejected (self
/// pairs would be counted).
Histogram cross_histogram(const std::vector<DetectionRecord>& stream_a,
                          const std::vector<DetectionRecord>& stream_b,
                          const HistogramConfig& cfg);

/// Chunk-parallel variant; the result is identical for any n_chunks.
Histogram cross_histogram_chunked(const std::vector<DetectionRecord>& stream_a,
                                  const std::vector<DetectionRecord>& stream_b,
                                  const HistogramConfig& cfg, std::size_t n_chunks);

struct PlateauNorm {
    std::int64_t tau_lo_ps;
    std::int64_t tau_hi_ps;
};

/// Divides by the mean peak amplitude (maximum bin inside each included
/// peak window); integrated areas stay available through peak_areas.
struct PeakMeanNorm {
    double period_ns;
    double window_ns;
    std::vector<int> excluded_ks;  // peak indices left out of the reference mean
};

Histogram normalize(const Histogram& hist, const PlateauNorm& method);
Histogram normalize(const Histogram& hist, const PeakMeanNorm& method);

/// Integrated counts in a window of width window_ns around each peak
/// k * period_ns; n_ref is the mean area over |k| >= 2.
struct PeakAreas {
    std::map<int, double> areas;
    double period_ns = 0.0;
    double window_ns = 0.0;
    double n_ref = 0.0;
    bool has_n_ref = false;
};

PeakAreas peak_areas(const Histogram& hist, double period_ns, double window_ns, int k_min,
                     int k_max);

/// A_0 / N, the pulsed single-photon purity estimate.
double pulsed_g2_zero(const PeakAreas& pa);

}  // namespace homsim
