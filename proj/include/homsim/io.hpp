#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "homsim/experiment.hpp"
#include "homsim/fit.hpp"
#include "homsim/histogram.hpp"

namespace homsim {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class StreamFormat { Csv, Binary };

/// CSV: header "channel,timestamp_ps", one record per line.
/// Binary: magic "HOMT", version byte 0x01, then little-endian records of
/// (u8 channel, u64 timestamp in ps).
void write_stream(const std::string& path, const std::vector<DetectionRecord>& records,
                  StreamFormat format);
std::vector<DetectionRecord> read_stream(const std::string& path);  // sniffs the format

void write_histogram_csv(const std::string& path, const Histogram& h);
void write_histogram_json(const std::string& path, const Histogram& h);
Histogram read_histogram_json(const std::string& path);

void write_fit_report(const std::string& path, const FitResult& r);
std::string fit_report_text(const FitResult& r);

/// Simulation run description: experiment + seed + output targets.
struct RunConfig {
    ExperimentConfig experiment;
    std::uint64_t seed = 1;
    std::string out_prefix = "run";
    std::vector<StreamFormat> formats = {StreamFormat::Csv};
};

RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);
std::string run_config_json(const RunConfig& cfg);

/// FNV-1a 64 over the canonical config serialization.
std::string config_hash(const RunConfig& cfg);

struct Manifest {
    std::string config_hash;
    std::uint64_t seed = 0;
    std::uint64_t n_emitted = 0;
    std::uint64_t n_detected[2] = {0, 0};
    std::vector<std::string> files;
};

void write_manifest(const std::string& path, const Manifest& m);

/// Two-column CSV (x,y), used for frequency scans.
std::pair<std::vector<double>, std::vector<double>> read_xy_csv(const std::string& path);
void write_xy_csv(const std::string& path, const std::vector<double>& x,
                  const std::vector<double>& y, const std::string& header);

}  // namespace homsim
