#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyzeta/contour.hpp"
#include "polyzeta/dirichlet_series.hpp"
#include "polyzeta/types.hpp"

namespace polyzeta {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // RMS of fit residuals
};

struct DensitySweep {
    std::string function_id;
    double sigma_lo = 0.0, sigma_hi = 0.0;
    std::vector<double> T_grid;
    std::vector<long long> counts;        // -1 where counting failed
    std::vector<std::string> errors;      // empty where counting succeeded
    LinearFit fit;                        // over successful grid points
};

struct MeanValueResult {
    double sigma_or_eta = 0.0;
    double theta = 0.0;
    int order_u = 0;
    int order_v = 0;
    double T = 0.0;
    Cx integral_over_T;
    std::optional<Cx> predicted;
    double rel_error = 0.0;  // |I/T - predicted| / |predicted| when predicted != 0
};

// Zero counts of f in (sigma_lo, sigma_hi) x (0, T) per grid point, plus an
// ordinary-least-squares line through (T, count).
DensitySweep density_sweep(const AnalyticFunction& f, double sigma_lo, double sigma_hi,
                           const std::vector<double>& T_grid, int workers = 1,
                           const SamplingPolicy& policy = {});

// (T log T)/(2 pi) - (1 + log 4 pi) T / (2 pi); independent of the derivative
// order.
double berndt_main_term(double T);

struct LmSum {
    double empirical = 0.0;
    double predicted = 0.0;
    int zeros_used = 0;
};

// 2 pi sum_{0 < gamma <= T} (beta - 1/2) vs the three-term main expression
// k T log log(T/2pi) - 2 pi k Li(T/2pi) + (log 2 - 2 k log log 2) T/2.
LmSum lm_weighted_sum(int k, double T, const ZeroReport& zeros);

// (1/T) int_0^T |f(sigma + i t)|^2 dt; predicted from the series when given.
MeanValueResult mean_square_integral(const AnalyticFunction& f, double sigma, double T,
                                     const GeneralDirichletSeries* series_backing = nullptr,
                                     int workers = 1, double panel_tol = 1e-6);

// (1/T) int_1^T zeta^{(u)}(eta + i t) zeta^{(v)}(theta - i t) dt vs
// zeta^{(u+v)}(eta + theta); requires eta, theta > -1/2 and eta + theta > 1.
MeanValueResult ingham_integral(int u, int v, double eta, double theta, double T,
                                int workers = 1, double panel_tol = 1e-6);

}  // namespace polyzeta
