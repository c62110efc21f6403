#pragma once

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace homsim {

struct ParamSpec {
    std::string name;
    double value = 0.0;  // initial guess
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    bool fixed = false;
};

/// One dataset; overrides pin parameters to per-block values (e.g. the
/// orthogonal-polarization curve with visibility = 0 in a joint fit).
struct DataBlock {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> sigma;
    std::map<std::string, double> overrides;
};

/// Weighted least squares against a registry model. Fixed and free
/// parameters together must cover the model's parameter list exactly.
struct FitProblem {
    std::string model_id;
    std::vector<DataBlock> data;
    std::vector<ParamSpec> params;
    int max_iterations = 500;
};

struct FitResult {
    std::string model_id;
    std::map<std::string, double> values;
    std::map<std::string, double> sigmas;  // 0 for fixed parameters
    std::vector<std::string> free_names;
    std::vector<std::vector<double>> covariance;  // ordered as free_names
    double chi2_reduced = 0.0;
    int n_iterations = 0;
    bool converged = false;
    std::vector<double> residual_history;  // weighted SSR after each accepted step
};

/// Damped Gauss-Newton (Levenberg-Marquardt) minimizer with a numeric
/// Jacobian. Bounds are enforced by log / logit reparameterization, so the
/// internal problem is unconstrained. Deterministic; non-convergence is
/// reported through FitResult::converged.
FitResult fit(const FitProblem& problem);

/// Central-difference Jacobian of a residual function; step_scale = 1 gives
/// the step the fitter itself uses, min_step optionally floors the step per
/// coordinate. Exposed for verification.
std::vector<std::vector<double>> fd_jacobian(
    const std::function<std::vector<double>(const std::vector<double>&)>& residuals,
    const std::vector<double>& at, double step_scale, const std::vector<double>& min_step = {});

}  // namespace homsim
