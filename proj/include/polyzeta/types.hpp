#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "polyzeta/errors.hpp"

namespace polyzeta {

using Cx = std::complex<double>;

// Axis-aligned rectangle in the s-plane: sigma = Re(s), t = Im(s).
struct ComplexRect {
    double sigma_min = 0.0;
    double sigma_max = 1.0;
    double t_min = 0.0;
    double t_max = 1.0;

    ComplexRect() = default;
    ComplexRect(double smin, double smax, double tmin, double tmax)
        : sigma_min(smin), sigma_max(smax), t_min(tmin), t_max(tmax) {
        if (!(sigma_min < sigma_max) || !(t_min < t_max))
            throw std::invalid_argument("ComplexRect: require sigma_min < sigma_max and t_min < t_max");
    }

    double width() const { return sigma_max - sigma_min; }
    double height() const { return t_max - t_min; }
    Cx center() const { return {0.5 * (sigma_min + sigma_max), 0.5 * (t_min + t_max)}; }
    bool contains(Cx s) const {
        return s.real() > sigma_min && s.real() < sigma_max &&
               s.imag() > t_min && s.imag() < t_max;
    }
    ComplexRect expanded(double delta) const {
        return {sigma_min - delta, sigma_max + delta, t_min - delta, t_max + delta};
    }
};

struct Disk {
    Cx center{0.0, 0.0};
    double radius = 1.0;

    Disk() = default;
    Disk(Cx c, double r) : center(c), radius(r) {
        if (!(r > 0.0)) throw std::invalid_argument("Disk: radius must be > 0");
    }
    bool contains(Cx s) const { return std::abs(s - center) < radius; }
};

using Contour = std::variant<ComplexRect, Disk>;

struct Pole {
    Cx location{1.0, 0.0};
    int order = 1;
};

inline ComplexRect whole_validated_plane() {
    return {-30.0, 100.0, -1.0e7, 1.0e7};
}

// Evaluatable complex function handle. `jet(s, k)` returns derivatives 0..k when
// an analytic derivative path exists; contour machinery falls back to Cauchy
// quadrature otherwise.
struct AnalyticFunction {
    std::string name;
    std::function<Cx(Cx)> eval;
    std::function<std::vector<Cx>(Cx, int)> jet;  // may be null
    int max_derivative_order = 0;
    std::vector<Pole> poles;
    ComplexRect domain = whole_validated_plane();

    Cx operator()(Cx s) const {
        for (const auto& p : poles) {
            if (std::abs(s - p.location) < 1e-13)
                throw EvaluationAtPole(name + ": evaluation at declared pole");
        }
        return eval(s);
    }
};

struct LocatedZero {
    Cx location;
    int multiplicity = 1;
    double residual = 0.0;  // |f(location)|
};

struct ZeroReport {
    Contour region;
    long long count = 0;  // with multiplicity
    std::vector<LocatedZero> zeros;
    double boundary_min_modulus = std::numeric_limits<double>::infinity();
    long long samples_used = 0;
    // not serialized: bookkeeping for retry/cluster diagnostics
    int unresolved_clusters = 0;
    bool region_adjusted = false;
};

}  // namespace polyzeta
