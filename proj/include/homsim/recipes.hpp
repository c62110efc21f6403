#pragma once

#include <map>
#include <string>
#include <vector>

#include "homsim/fit.hpp"
#include "homsim/histogram.hpp"
#include "homsim/models.hpp"

namespace homsim {

/// Overrides: name -> value for initial guesses, "fix:name" entries pin a
/// parameter. Each recipe assembles the FitProblem the analysis workflow
/// uses by default.
using FitOverrides = std::map<std::string, double>;

/// 1 - b exp(-|tau|/tau_hbt) on a plateau-normalized histogram.
FitResult fit_hbt_cw(const Histogram& normalized_hist, const FitOverrides& overrides = {});

/// Joint fit of the parallel and orthogonal CW curves sharing
/// (delta_t, r2, b, tau_hbt, tau_par) with visibility = 0 imposed on the
/// orthogonal block. Both histograms must be plateau-normalized and share
/// their binning.
FitResult fit_hom_cw_joint(const Histogram& parallel_hist, const Histogram& orthogonal_hist,
                           const FitOverrides& overrides = {});

/// Single-exponential decay on a sync->detector delay histogram, fitted on
/// [t_min_ns, t_max_ns].
FitResult fit_lifetime(const Histogram& decay_hist, double t_min_ns, double t_max_ns,
                       const FitOverrides& overrides = {});

/// Lorentzian line on a frequency scan (x in GHz).
FitResult fit_lorentzian(const std::vector<double>& nu_ghz, const std::vector<double>& counts,
                         const FitOverrides& overrides = {});

/// Central-region fit of the pulsed correlation histogram with
/// (r2, t2, jitter, period) fixed and (tau1, gamma_star, v) free; the
/// reference peak area is measured from the side peaks of the same
/// histogram.
struct HomPulsedSetup {
    double r2 = 0.5;
    double t2 = 0.5;
    double jitter_sigma_ps = 0.0;
    double period_ns = 40.33;
    int k_ref_min = 2;   // reference peaks |k| in [k_ref_min, k_ref_max]
    int k_ref_max = 10;
    double fit_halfspan_ns = 0.0;  // 0: use period / 2
};

FitResult fit_hom_pulsed(const Histogram& raw_hist, const HomPulsedSetup& setup,
                         const FitOverrides& overrides = {});

/// Visibility uncertainty from the delay-mismatch uncertainty: slope of
/// visibility_vs_offset near zero offset times sigma_delta.
double propagate_delay_uncertainty(const PulsedHomModel& m, double sigma_delta_ns,
                                   double window_ns);

}  // namespace homsim
