#include "polyzeta/counting.hpp"

#include <cmath>

#include "polyzeta/parallel.hpp"
#include "polyzeta/quadrature.hpp"
#include "polyzeta/zeta.hpp"

namespace polyzeta {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

LinearFit ols_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    LinearFit fit;
    std::size_t n = xs.size();
    if (n == 0) return fit;
    if (n == 1) {
        fit.intercept = ys[0];
        return fit;
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

}  // namespace

DensitySweep density_sweep(const AnalyticFunction& f, double sigma_lo, double sigma_hi,
                           const std::vector<double>& T_grid, int workers,
                           const SamplingPolicy& policy) {
    if (!(sigma_lo < sigma_hi)) throw std::invalid_argument("density_sweep: sigma_lo < sigma_hi");
    for (std::size_t i = 1; i < T_grid.size(); ++i)
        if (!(T_grid[i] > T_grid[i - 1]))
            throw std::invalid_argument("density_sweep: T grid must be increasing");

    DensitySweep sweep;
    sweep.function_id = f.name;
    sweep.sigma_lo = sigma_lo;
    sweep.sigma_hi = sigma_hi;
    sweep.T_grid = T_grid;
    sweep.counts.assign(T_grid.size(), -1);
    sweep.errors.assign(T_grid.size(), "");
    parallel_for(T_grid.size(), workers, [&](std::size_t i) {
        try {
            ZeroReport rep =
                count_zeros_rect(f, ComplexRect(sigma_lo, sigma_hi, 0.0, T_grid[i]), policy);
            sweep.counts[i] = rep.count;
        } catch (const std::exception& e) {
            sweep.errors[i] = e.what();
        }
    });
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < T_grid.size(); ++i) {
        if (sweep.counts[i] >= 0) {
            xs.push_back(T_grid[i]);
            ys.push_back(static_cast<double>(sweep.counts[i]));
        }
    }
    sweep.fit = ols_fit(xs, ys);
    return sweep;
}

double berndt_main_term(double T) {
    if (!(T > 1.0)) throw std::invalid_argument("berndt_main_term: T > 1 required");
    return T * std::log(T) / kTwoPi - (1.0 + std::log(2.0 * kTwoPi)) * T / kTwoPi;
}

LmSum lm_weighted_sum(int k, double T, const ZeroReport& zeros) {
    if (k < 1) throw std::invalid_argument("lm_weighted_sum: k >= 1 required");
    if (zeros.unresolved_clusters > 0)
        throw IncompleteZeroSet("lm_weighted_sum: localization reported unresolved clusters");
    LmSum out;
    for (const auto& z : zeros.zeros) {
        double gamma = z.location.imag();
        if (gamma > 0.0 && gamma <= T) {
            out.empirical += kTwoPi * (z.location.real() - 0.5) * z.multiplicity;
            out.zeros_used += z.multiplicity;
        }
    }
    double x = T / kTwoPi;
    double li = logarithmic_integral(x);
    out.predicted = k * T * std::log(std::log(x)) - kTwoPi * k * li +
                    (std::log(2.0) - 2.0 * k * std::log(std::log(2.0))) * (T / 2.0);
    return out;
}

MeanValueResult mean_square_integral(const AnalyticFunction& f, double sigma, double T,
                                     const GeneralDirichletSeries* series_backing, int workers,
                                     double panel_tol) {
    if (!(sigma > 0.5))
        throw std::invalid_argument("mean_square_integral: sigma > 1/2 required");
    for (const auto& p : f.poles) {
        if (std::abs(p.location.real() - sigma) < 1e-12 && p.location.imag() >= 0.0 &&
            p.location.imag() <= T)
            throw std::invalid_argument("mean_square_integral: pole on the segment");
    }
    std::function<double(double)> g = [&](double t) { return std::norm(f.eval(Cx(sigma, t))); };
    double integral = integrate_panels<double>(g, 0.0, T, 0.5, panel_tol, workers);
    MeanValueResult r;
    r.sigma_or_eta = sigma;
    r.T = T;
    r.integral_over_T = Cx(integral / T, 0.0);
    if (series_backing) {
        r.predicted = Cx(mean_square_predicted(*series_backing, sigma).value, 0.0);
        if (std::abs(*r.predicted) > 0.0)
            r.rel_error = std::abs(r.integral_over_T - *r.predicted) / std::abs(*r.predicted);
    }
    return r;
}

MeanValueResult ingham_integral(int u, int v, double eta, double theta, double T, int workers,
                                double panel_tol) {
    if (u < 0 || v < 0) throw std::invalid_argument("ingham_integral: u, v >= 0 required");
    if (!(eta > -0.5) || !(theta > -0.5) || !(eta + theta > 1.0))
        throw HypothesisViolation("ingham_integral: need eta, theta > -1/2 and eta + theta > 1");
    if (!(T > 1.0)) throw std::invalid_argument("ingham_integral: T > 1 required");
    ZetaParams params;
    std::function<Cx(double)> g = [&](double t) -> Cx {
        Cx a = (u == 0) ? zeta(Cx(eta, t), params) : zeta_jet(Cx(eta, t), u, params)[u];
        Cx b = (v == 0) ? zeta(Cx(theta, -t), params) : zeta_jet(Cx(theta, -t), v, params)[v];
        return a * b;
    };
    Cx integral = integrate_panels<Cx>(g, 1.0, T, 0.5, panel_tol, workers);
    MeanValueResult r;
    r.sigma_or_eta = eta;
    r.theta = theta;
    r.order_u = u;
    r.order_v = v;
    r.T = T;
    r.integral_over_T = integral / T;
    int uv = u + v;
    Cx pred = (uv == 0) ? zeta(Cx(eta + theta, 0.0), params)
                        : zeta_jet(Cx(eta + theta, 0.0), uv, params)[uv];
    r.predicted = pred;
    if (std::abs(pred) > 0.0) r.rel_error = std::abs(r.integral_over_T - pred) / std::abs(pred);
    return r;
}

}  // namespace polyzeta
