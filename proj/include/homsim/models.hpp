#pragma once

#include <functional>
#include <string>
#include <vector>

namespace homsim {

// Times in ns, rates in ns^-1, frequency results in MHz unless noted.

/// CW autocorrelation 1 - b exp(-|tau|/tau_hbt).
struct CwHbtModel {
    double b = 1.0;
    double tau_hbt = 4.0;
};

double g2_hbt_cw(double tau_ns, const CwHbtModel& m);

/// CW two-photon interference correlation:
///   2 R T g(tau) + [T^2 g(tau - dt) + R^2 g(tau + dt)] (1 - V e^(-|tau|/tau_par))
/// with V = 0 for orthogonal polarizations.
struct CwHomModel {
    double r2 = 0.5;
    double t2 = 0.5;
    double delta_t_ns = 40.0;
    double visibility = 1.0;
    double tau_par_ns = 2.8;
    CwHbtModel g;
};

double g2_hom_cw(double tau_ns, const CwHomModel& m);

struct CoherenceSummary {
    double tau_c_ns;             // 2 tau_par
    double fwhm_coherence_mhz;   // 1 / (pi tau_c)
};

CoherenceSummary coherence_from_tau_par(double tau_par_ns);

/// Total linewidth 1/(2 pi tau1) + gamma_star / pi, in MHz.
double fwhm_total_mhz(double tau1_ns, double gamma_star_per_ns);

/// Post-selected coherence (g_perp(0) - g_par(0)) / g_perp(0).
double postselected_coherence(double g2_perp_0, double g2_par_0);

/// HBT variant, 1 - 2 g2_hbt(0).
double postselected_coherence_hbt(double g2_hbt_0);

/// Relative pulsed peak area A_k / N: 1 - R^2 at k = -1, 1 - T^2 at k = +1,
/// 1 for |k| >= 2. k = 0 belongs to the central-peak model and is rejected.
double pulsed_peak_area_ratio(int k, double big_r, double big_t);

/// Central-peak coincidence density under pulsed excitation.
struct PulsedHomModel {
    double tau1_ns = 4.04;
    double gamma_star_per_ns = 0.055;
    double v = 0.95;             // technical visibility ceiling
    double r2 = 0.524;
    double t2 = 0.476;
    double jitter_sigma_ps = 163.0;  // per detector; pair resolution is sqrt(2) larger
    double period_ns = 40.33;
};

/// Unnormalized density
///   (R^2 + T^2) e^(-|tau|/tau1) - 2 R T v e^(-(1/tau1 + 2 gamma*) |tau|)
/// convolved with a Gaussian of std sqrt(2) * jitter_sigma (closed form).
/// R, T are r2, t2 renormalized to unit sum.
double hom_pulsed_central_density(double tau_ns, const PulsedHomModel& m);

/// (A_perp - A_par) / A_perp.
double visibility_from_areas(double a_perp, double a_par);

/// Windowed-area visibility for wavepackets offset by delta_ns, by numeric
/// integration of the offset-pair density over |tau| <= window_ns / 2.
double visibility_vs_offset(double delta_ns, const PulsedHomModel& m, double window_ns);

/// Mean wavepacket overlap (v + 1) / (4 R T (1 - g2_zero)) - 1.
double ms_overlap(double v, double big_r, double big_t, double g2_zero);

/// Visibility ceiling alpha^2 from the non-interfering spectral fraction.
double zpl_visibility_cap(double alpha);

struct SpectralModel {
    double nu0_ghz = 0.0;
    double fwhm_mhz = 55.0;
    double amplitude = 1.0;
    double offset = 0.0;
};

double lorentzian(double nu_ghz, const SpectralModel& m);

/// amp * e^(-t/tau1) for t >= 0, else 0.
double exp_decay(double t_ns, double tau1_ns, double amplitude);

/// Two-sided exponential e^(-rate |x|) convolved with a zero-mean Gaussian
/// of std sigma; exact closed form, stable for large |x|.
double exp_gauss_conv(double x, double rate, double sigma);

/// Discrete Gaussian convolution on a uniform grid, kernel renormalized to
/// preserve the integral. Requires grid spacing <= sigma / 4.
std::vector<double> convolve_gaussian(const std::function<double(double)>& fn, double sigma_ps,
                                      const std::vector<double>& grid_ns);

/// Model registry for the fit engine and the CLI.
struct ModelInfo {
    std::vector<std::string> param_names;
    std::function<double(double x, const std::vector<double>& params)> eval;
};

const ModelInfo& model_registry(const std::string& id);
std::vector<std::string> registered_models();

}  // namespace homsim
