#include "polyzeta/contour.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

namespace polyzeta {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// u in [0,1) -> boundary point, positively oriented.
Cx contour_point(const Contour& c, double u) {
    if (std::holds_alternative<ComplexRect>(c)) {
        const auto& r = std::get<ComplexRect>(c);
        double v = 4.0 * (u - std::floor(u));
        if (v < 1.0) return {r.sigma_min + v * r.width(), r.t_min};
        if (v < 2.0) return {r.sigma_max, r.t_min + (v - 1.0) * r.height()};
        if (v < 3.0) return {r.sigma_max - (v - 2.0) * r.width(), r.t_max};
        return {r.sigma_min, r.t_max - (v - 3.0) * r.height()};
    }
    const auto& d = std::get<Disk>(c);
    double th = kTwoPi * u;
    return d.center + d.radius * Cx(std::cos(th), std::sin(th));
}

int initial_samples(const Contour& c, const SamplingPolicy& p) {
    double length;
    int minimum;
    if (std::holds_alternative<ComplexRect>(c)) {
        const auto& r = std::get<ComplexRect>(c);
        length = 2.0 * (r.width() + r.height());
        minimum = 4 * p.initial_per_edge;
    } else {
        length = 2.0 * 3.14159265358979323846 * std::get<Disk>(c).radius;
        minimum = p.initial_circle;
    }
    double scaled = p.samples_per_unit * length;
    double capped = std::min(scaled, static_cast<double>(p.sample_budget) / 4.0);
    return std::max(minimum, static_cast<int>(std::ceil(capped)));
}

double wrapped_phase_diff(Cx f0, Cx f1) {
    double d = std::arg(f1) - std::arg(f0);
    while (d > 3.14159265358979323846) d -= kTwoPi;
    while (d < -3.14159265358979323846) d += kTwoPi;
    return d;
}

// Distance from a point to the boundary curve of the contour.
double distance_to_boundary(const Contour& c, Cx p) {
    if (std::holds_alternative<Disk>(c)) {
        const auto& d = std::get<Disk>(c);
        return std::abs(std::abs(p - d.center) - d.radius);
    }
    const auto& r = std::get<ComplexRect>(c);
    double x = p.real(), y = p.imag();
    if (r.contains(p)) {
        return std::min(std::min(x - r.sigma_min, r.sigma_max - x),
                        std::min(y - r.t_min, r.t_max - y));
    }
    double cx = std::clamp(x, r.sigma_min, r.sigma_max);
    double cy = std::clamp(y, r.t_min, r.t_max);
    return std::hypot(x - cx, y - cy);
}

bool contour_contains(const Contour& c, Cx p) {
    if (std::holds_alternative<Disk>(c)) return std::get<Disk>(c).contains(p);
    return std::get<ComplexRect>(c).contains(p);
}

struct WindingState {
    double phase_sum = 0.0;
    double min_modulus = std::numeric_limits<double>::infinity();
    long long evals = 0;
};

}  // namespace

WindingResult winding_number(const AnalyticFunction& f, const Contour& boundary,
                             const SamplingPolicy& policy) {
    WindingState st;
    auto eval = [&](double u) -> Cx {
        if (++st.evals > policy.sample_budget)
            throw NonConvergence("winding_number: sample budget exceeded");
        Cx v;
        try {
            v = f(contour_point(boundary, u));
        } catch (const EvaluationAtPole&) {
            throw BoundaryZero("winding_number: declared pole on the boundary");
        }
        double m = std::abs(v);
        if (!(m > policy.boundary_zero_threshold))
            throw BoundaryZero("winding_number: |f| below threshold on the boundary");
        st.min_modulus = std::min(st.min_modulus, m);
        return v;
    };

    // A pair is plausible when the wrapped phase step is small and the moduli
    // are comparable. Accepted intervals are verified at their midpoint: a
    // 2*pi slip with matched endpoints shows up as a large half-step.
    auto plausible = [&](Cx f0, Cx f1) {
        double m0 = std::abs(f0), m1 = std::abs(f1);
        return std::abs(wrapped_phase_diff(f0, f1)) < policy.max_phase_step &&
               std::max(m0, m1) < 4.0 * std::min(m0, m1);
    };
    std::function<void(double, Cx, double, Cx)> walk = [&](double u0, Cx f0, double u1, Cx f1) {
        if ((u1 - u0) < 1e-14) {
            st.phase_sum += wrapped_phase_diff(f0, f1);
            return;
        }
        if (plausible(f0, f1)) {
            double um = 0.5 * (u0 + u1);
            Cx fm = eval(um);
            if (plausible(f0, fm) && plausible(fm, f1)) {
                st.phase_sum += wrapped_phase_diff(f0, fm) + wrapped_phase_diff(fm, f1);
                return;
            }
            walk(u0, f0, um, fm);
            walk(um, fm, u1, f1);
            return;
        }
        double um = 0.5 * (u0 + u1);
        Cx fm = eval(um);
        walk(u0, f0, um, fm);
        walk(um, fm, u1, f1);
    };

    int n = initial_samples(boundary, policy);
    std::vector<Cx> base(n);
    for (int i = 0; i < n; ++i) base[i] = eval(static_cast<double>(i) / n);
    for (int i = 0; i < n; ++i) {
        double u0 = static_cast<double>(i) / n;
        double u1 = static_cast<double>(i + 1) / n;
        walk(u0, base[i], u1, base[(i + 1) % n]);
    }

    WindingResult r;
    r.raw_turns = st.phase_sum / kTwoPi;
    r.winding = static_cast<int>(std::llround(r.raw_turns));
    r.boundary_min_modulus = st.min_modulus;
    r.samples_used = st.evals;
    if (std::abs(r.raw_turns - r.winding) >= 0.25)
        throw NonConvergence("winding_number: phase sum not close to an integer");
    return r;
}

namespace {

Contour expand_contour(const Contour& c, double delta) {
    if (std::holds_alternative<ComplexRect>(c))
        return std::get<ComplexRect>(c).expanded(delta);
    const auto& d = std::get<Disk>(c);
    return Disk(d.center, d.radius + delta);
}

long long pole_orders_inside(const AnalyticFunction& f, const Contour& c) {
    long long total = 0;
    for (const auto& p : f.poles)
        if (contour_contains(c, p.location)) total += p.order;
    return total;
}

bool pole_near_boundary(const AnalyticFunction& f, const Contour& c, double eps) {
    for (const auto& p : f.poles)
        if (distance_to_boundary(c, p.location) < eps) return true;
    return false;
}

}  // namespace

ZeroReport count_zeros(const AnalyticFunction& f, const Contour& region,
                       const SamplingPolicy& policy) {
    static const double kOffsets[] = {0.0, 1e-4, 3e-4, 1e-3, 3e-3};
    std::exception_ptr last;
    for (double delta : kOffsets) {
        Contour c = delta == 0.0 ? region : expand_contour(region, delta);
        if (pole_near_boundary(f, c, 1e-6)) continue;
        try {
            WindingResult w = winding_number(f, c, policy);
            ZeroReport rep;
            rep.region = c;
            rep.count = w.winding + pole_orders_inside(f, c);
            rep.boundary_min_modulus = w.boundary_min_modulus;
            rep.samples_used = w.samples_used;
            rep.region_adjusted = delta != 0.0;
            return rep;
        } catch (const BoundaryZero&) {
            last = std::current_exception();
        } catch (const NonConvergence&) {
            last = std::current_exception();
        }
    }
    if (last) std::rethrow_exception(last);
    throw BoundaryZero("count_zeros: declared pole within 1e-6 of every perturbed boundary");
}

ZeroReport count_zeros_rect(const AnalyticFunction& f, const ComplexRect& region,
                            const SamplingPolicy& policy) {
    return count_zeros(f, Contour(region), policy);
}

double derivative_error_bound(double eps, double r, double r_prime, int k) {
    if (!(r > 0.0) || !(r < r_prime))
        throw InvalidRadii("derivative_error_bound: require 0 < r < r'");
    if (eps < 0.0 || k < 0)
        throw std::invalid_argument("derivative_error_bound: eps >= 0 and k >= 0 required");
    double fk = 1.0;
    for (int i = 2; i <= k; ++i) fk *= i;
    return fk * std::ldexp(1.0, k) * eps / std::pow(r_prime - r, k);
}

Cx cauchy_derivative(const AnalyticFunction& f, Cx s, int k, double radius) {
    if (k < 0) throw std::invalid_argument("cauchy_derivative: k >= 0 required");
    double r = radius;
    if (!(r > 0.0)) {
        double dist = 0.5;
        for (const auto& p : f.poles) dist = std::min(dist, std::abs(s - p.location));
        const auto& d = f.domain;
        dist = std::min({dist, s.real() - d.sigma_min, d.sigma_max - s.real(),
                         s.imag() - d.t_min, d.t_max - s.imag()});
        r = std::min(0.25, 0.5 * dist);
        if (!(r > 0.0)) throw PoleInDisk("cauchy_derivative: no valid default radius at s");
    }
    for (const auto& p : f.poles)
        if (std::abs(s - p.location) <= r)
            throw PoleInDisk("cauchy_derivative: declared pole inside quadrature disk");

    double fk = 1.0;
    for (int i = 2; i <= k; ++i) fk *= i;
    const double rk = std::pow(r, k);
    double peak = 0.0;  // largest |f| seen on the circle
    auto estimate = [&](int nodes) {
        Cx acc(0.0, 0.0);
        for (int j = 0; j < nodes; ++j) {
            double th = kTwoPi * j / nodes;
            Cx w = f.eval(s + r * Cx(std::cos(th), std::sin(th)));
            peak = std::max(peak, std::abs(w));
            acc += w * Cx(std::cos(k * th), -std::sin(k * th));
        }
        return acc * (fk / (rk * nodes));
    };
    Cx prev = estimate(64);
    for (int nodes = 128; nodes <= 16384; nodes *= 2) {
        Cx cur = estimate(nodes);
        // agreement to 1e-11 relative, with a floor at the quadrature's own
        // rounding scale (the k!/r^k amplification of eps-level noise)
        double floor = 1e-14 * fk / rk * peak;
        if (std::abs(cur - prev) <= std::max(1e-11 * std::max(1.0, std::abs(cur)), floor))
            return cur;
        prev = cur;
    }
    throw NonConvergence("cauchy_derivative: node doubling did not stabilize");
}

Cx nth_derivative(const AnalyticFunction& f, Cx s, int k, double radius) {
    if (k == 0) return f(s);
    if (f.jet) return f.jet(s, k)[k];
    return cauchy_derivative(f, s, k, radius);
}

namespace {

// Count with no perturbation retries; boundary trouble propagates so the
// caller can move its cut lines.
long long strict_count(const AnalyticFunction& f, const ComplexRect& rect,
                       const SamplingPolicy& policy) {
    if (pole_near_boundary(f, Contour(rect), 1e-6))
        throw BoundaryZero("strict_count: declared pole near boundary");
    WindingResult w = winding_number(f, Contour(rect), policy);
    return w.winding + pole_orders_inside(f, Contour(rect));
}

struct Localizer {
    const AnalyticFunction& f;
    double tol;
    const SamplingPolicy& policy;
    std::vector<LocatedZero> zeros;
    int unresolved = 0;

    // Multiplicity-accelerated Newton, constrained to stay near the cell.
    bool newton(Cx start, int mult_hint, const ComplexRect& cell, Cx& out, double& residual) {
        Cx z = start;
        double bound = 2.0 * std::max(cell.width(), cell.height());
        for (int it = 0; it < 50; ++it) {
            Cx fv;
            try {
                fv = f(z);
            } catch (const EvaluationAtPole&) {
                return false;
            }
            Cx dv = nth_derivative(f, z, 1, std::max(cell.width(), cell.height()) * 0.25);
            if (std::abs(dv) == 0.0) break;
            Cx step = static_cast<double>(mult_hint) * fv / dv;
            z -= step;
            if (std::abs(z - cell.center()) > bound + 1.0) return false;
            // run past |f| <= tol: the position must converge too, or the
            // isolating disk cannot see multiple zeros
            if (std::abs(step) < 1e-13 * (1.0 + std::abs(z))) break;
        }
        double fz = std::abs(f.eval(z));
        if (fz <= tol) {
            out = z;
            residual = fz;
            return true;
        }
        return false;
    }

    int disk_multiplicity(Cx z, long long cap) {
        double r = std::max(tol * 10.0, 1e-12);
        for (int attempt = 0; attempt < 5; ++attempt) {
            try {
                WindingResult w = winding_number(f, Contour(Disk(z, r)), policy);
                return static_cast<int>(std::clamp<long long>(w.winding, 1, cap));
            } catch (const NumericError&) {
                r *= 1.7;
            }
        }
        return 1;
    }

    void refine_cell(const ComplexRect& cell, long long count, int depth) {
        if (count <= 0) return;
        double scale = std::max(cell.width(), cell.height());
        bool at_floor = scale <= std::max(tol * 4.0, 1e-10) || depth > 60;

        if (count == 1 || at_floor) {
            Cx z;
            double residual = 0.0;
            if (newton(cell.center(), static_cast<int>(count), cell, z, residual) &&
                cell.contains(z)) {
                int m = disk_multiplicity(z, count);
                if (m < count && !at_floor) {
                    // Newton caught one zero of a looser cluster; isolate it and
                    // subdivide for the rest.
                    zeros.push_back({z, m, residual});
                    subdivide(cell, count - m, depth, z);
                    return;
                }
                zeros.push_back({z, static_cast<int>(at_floor ? count : m), residual});
                if (at_floor && m < count) ++unresolved;
                return;
            }
            if (at_floor) {
                ++unresolved;
                zeros.push_back({cell.center(), static_cast<int>(count),
                                 std::abs(f.eval(cell.center()))});
                return;
            }
        }
        subdivide(cell, count, depth, std::nullopt);
    }

    void subdivide(const ComplexRect& cell, long long count, int depth,
                   std::optional<Cx> exclude) {
        static const double kFracs[] = {0.5, 0.47, 0.53, 0.44, 0.56, 0.415};
        for (double frac : kFracs) {
            double cs = cell.sigma_min + frac * cell.width();
            double ct = cell.t_min + frac * cell.height();
            ComplexRect quads[4] = {
                {cell.sigma_min, cs, cell.t_min, ct},
                {cs, cell.sigma_max, cell.t_min, ct},
                {cell.sigma_min, cs, ct, cell.t_max},
                {cs, cell.sigma_max, ct, cell.t_max}};
            long long counts[4];
            long long total = 0;
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i) {
                try {
                    counts[i] = strict_count(f, quads[i], policy);
                    if (exclude && quads[i].contains(*exclude)) {
                        // discount the zero already recorded from this cluster
                        counts[i] -= 1;
                    }
                    if (counts[i] < 0) ok = false;
                    total += counts[i];
                } catch (const NumericError&) {
                    ok = false;
                }
            }
            if (!ok || total != count) continue;
            for (int i = 0; i < 4; ++i) refine_cell(quads[i], counts[i], depth + 1);
            return;
        }
        // No clean cut found: report the cell as an unresolved cluster.
        ++unresolved;
        zeros.push_back({cell.center(), static_cast<int>(count),
                         std::abs(f.eval(cell.center()))});
    }
};

}  // namespace

ZeroReport localize_zeros(const AnalyticFunction& f, const ComplexRect& region,
                          double tol, const SamplingPolicy& policy) {
    ZeroReport rep = count_zeros_rect(f, region, policy);
    if (rep.count < 0)
        throw NonConvergence("localize_zeros: negative zero count (undeclared pole?)");
    if (rep.count == 0) return rep;

    Localizer loc{f, tol, policy, {}, 0};
    loc.refine_cell(std::get<ComplexRect>(rep.region), rep.count, 0);

    std::sort(loc.zeros.begin(), loc.zeros.end(), [](const LocatedZero& a, const LocatedZero& b) {
        if (a.location.imag() != b.location.imag()) return a.location.imag() < b.location.imag();
        return a.location.real() < b.location.real();
    });
    rep.zeros = std::move(loc.zeros);
    rep.unresolved_clusters = loc.unresolved;
    return rep;
}

}  // namespace polyzeta
