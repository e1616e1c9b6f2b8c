#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "polyzeta/errors.hpp"
#include "polyzeta/parallel.hpp"

namespace polyzeta {

// 16-point Gauss-Legendre nodes/weights on [-1,1] (positive half; symmetric).
inline const double kGL16Nodes[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
inline const double kGL16Weights[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

template <typename T>
T gauss_legendre_16(const std::function<T(double)>& f, double a, double b) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    T acc{};
    for (int i = 0; i < 8; ++i) {
        acc += kGL16Weights[i] * (f(mid + half * kGL16Nodes[i]) + f(mid - half * kGL16Nodes[i]));
    }
    return acc * half;
}

// Composite panels of fixed width with recursive halving where a panel
// disagrees with its two halves beyond rel_tol. Panels are summed by pairwise
// tree reduction so the result does not depend on worker scheduling.
template <typename T>
T integrate_panels(const std::function<T(double)>& f, double a, double b,
                   double panel_width, double rel_tol, int workers = 1,
                   int max_depth = 12) {
    if (!(b > a)) return T{};
    std::size_t n_panels = static_cast<std::size_t>(std::ceil((b - a) / panel_width));
    std::function<T(double, double, int)> panel = [&](double lo, double hi, int depth) -> T {
        T whole = gauss_legendre_16<T>(f, lo, hi);
        double mid = 0.5 * (lo + hi);
        T left = gauss_legendre_16<T>(f, lo, mid);
        T right = gauss_legendre_16<T>(f, mid, hi);
        T split = left + right;
        double err = std::abs(whole - split);
        if (err <= rel_tol * (1.0 + std::abs(split)) || depth >= max_depth) return split;
        return panel(lo, mid, depth + 1) + panel(mid, hi, depth + 1);
    };
    std::vector<T> parts(n_panels);
    parallel_for(n_panels, workers, [&](std::size_t i) {
        double lo = a + (b - a) * static_cast<double>(i) / static_cast<double>(n_panels);
        double hi = a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(n_panels);
        parts[i] = panel(lo, hi, 0);
    });
    return pairwise_sum(parts);
}

// Li(x) = int_2^x dy / log y.
inline double logarithmic_integral(double x, double rel_tol = 1e-9) {
    if (!(x > 2.0)) {
        if (x == 2.0) return 0.0;
        throw std::invalid_argument("logarithmic_integral: x must be >= 2");
    }
    std::function<double(double)> f = [](double y) { return 1.0 / std::log(y); };
    return integrate_panels<double>(f, 2.0, x, 1.0, rel_tol, 1);
}

}  // namespace polyzeta
