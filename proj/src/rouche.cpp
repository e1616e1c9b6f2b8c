#include "polyzeta/rouche.hpp"

#include <algorithm>
#include <cmath>

#include "polyzeta/parallel.hpp"
#include "polyzeta/power_series.hpp"

namespace polyzeta {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Roots of a complex polynomial (ascending coefficients) via Durand-Kerner.
std::vector<Cx> poly_roots(std::vector<Cx> c) {
    while (!c.empty() && std::abs(c.back()) < 1e-300) c.pop_back();
    if (c.size() <= 1) return {};
    int n = static_cast<int>(c.size()) - 1;
    Cx lead = c.back();
    for (auto& x : c) x /= lead;
    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
    radius = 1.0 + radius;
    std::vector<Cx> r(n);
    for (int i = 0; i < n; ++i) {
        double th = kTwoPi * i / n + 0.35;
        r[i] = 0.7 * radius * Cx(std::cos(th), std::sin(th));
    }
    auto eval = [&](Cx x) {
        Cx v = c[n];
        for (int i = n - 1; i >= 0; --i) v = v * x + c[i];
        return v;
    };
    for (int it = 0; it < 300; ++it) {
        double delta = 0.0;
        for (int i = 0; i < n; ++i) {
            Cx denom(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (r[i] - r[j]);
            if (std::abs(denom) < 1e-280) continue;
            Cx step = eval(r[i]) / denom;
            r[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-14) break;
    }
    return r;
}

}  // namespace

Cx ExpPolyTarget::eval(Cx s) const {
    Cx p(0.0, 0.0);
    Cx d = s - center;
    for (std::size_t j = coeffs.size(); j-- > 0;) p = p * d + coeffs[j];
    return std::exp(p);
}

std::vector<Cx> ExpPolyTarget::jet_at(Cx s, int max_k) const {
    std::size_t n = static_cast<std::size_t>(max_k) + 1;
    std::size_t order = std::max(n, coeffs.size());
    PowerSeries p(order);
    for (std::size_t j = 0; j < coeffs.size(); ++j) p[j] = coeffs[j];
    PowerSeries shifted = p.recentered(s - center);
    PowerSeries e = PowerSeries::exp(shifted);
    std::vector<Cx> out(n);
    double fj = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) fj *= static_cast<double>(j);
        out[j] = (j < e.size() ? e[j] : Cx(0.0, 0.0)) * fj;
    }
    return out;
}

AnalyticFunction ExpPolyTarget::as_function(int max_order) const {
    AnalyticFunction f;
    f.name = "exp_poly_target";
    ExpPolyTarget copy = *this;
    f.eval = [copy](Cx s) { return copy.eval(s); };
    f.jet = [copy](Cx s, int k) { return copy.jet_at(s, k); };
    f.max_derivative_order = max_order;
    return f;
}

ExpPolyTarget jet_log_solve(const Jet& c, Cx center) {
    if (c.values.empty() || std::abs(c.values[0]) < 1e-300)
        throw ZeroLeadingJet("jet_log_solve: c_0 must be nonzero");
    std::size_t n = c.values.size();
    PowerSeries g(n);
    double fj = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) fj *= static_cast<double>(j);
        g[j] = c.values[j] / fj;  // Taylor coefficients of the target function
    }
    PowerSeries p = PowerSeries::log(g);
    ExpPolyTarget t;
    t.center = center;
    t.coeffs = p.coeffs();
    return t;
}

ThetaSolution solve_theta(const DirichletPolynomial& P, Cx alpha) {
    // at least two coefficient series must be alive at alpha
    std::vector<std::pair<DirichletPolynomial::Degree, Cx>> live;
    int alive = 0;
    for (const auto& [deg, coeff] : P.terms()) {
        Cx v = ds_eval(coeff, alpha).value;
        if (std::abs(v) > 1e-10) ++alive;
        live.emplace_back(deg, v);
    }
    if (alive < 2)
        throw DegenerateAtAlpha("solve_theta: fewer than two coefficients nonzero at alpha");

    int nv = P.num_vars();
    // pivot variable: 0 if X_0 occurs, else the lowest variable with positive degree
    int pivot = -1;
    for (int j = 0; j < nv && pivot < 0; ++j)
        for (const auto& [deg, v] : live)
            if (deg[j] > 0 && std::abs(v) > 1e-300) {
                pivot = j;
                break;
            }
    if (pivot < 0) throw DegenerateAtAlpha("solve_theta: polynomial has no variable");

    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<Cx> pin(nv);
        for (int j = 0; j < nv; ++j)
            pin[j] = Cx(1.0, 0.37 * j * attempt);  // attempt 0: all ones
        // univariate polynomial in theta_pivot
        int maxdeg = 0;
        for (const auto& [deg, v] : live) maxdeg = std::max(maxdeg, deg[pivot]);
        std::vector<Cx> upoly(maxdeg + 1, Cx(0.0, 0.0));
        for (const auto& [deg, v] : live) {
            Cx c = v;
            for (int j = 0; j < nv; ++j) {
                if (j == pivot) continue;
                for (int e = 0; e < deg[j]; ++e) c *= pin[j];
            }
            upoly[deg[pivot]] += c;
        }
        auto roots = poly_roots(upoly);
        // Newton polish and pick the nonzero root closest to unit modulus.
        auto eval_u = [&](Cx x) {
            Cx val(0.0, 0.0), der(0.0, 0.0);
            for (std::size_t i = upoly.size(); i-- > 0;) {
                der = der * x + val;
                val = val * x + upoly[i];
            }
            return std::pair<Cx, Cx>(val, der);
        };
        Cx best(0.0, 0.0);
        double best_score = -1.0;
        for (Cx r : roots) {
            for (int it = 0; it < 8; ++it) {
                auto [v, d] = eval_u(r);
                if (std::abs(d) < 1e-280) break;
                r -= v / d;
            }
            double m = std::abs(r);
            if (m < 1e-8) continue;
            double score = std::min(m, 1.0 / m);
            if (score > best_score) {
                best_score = score;
                best = r;
            }
        }
        if (best_score < 0.0) continue;  // only the zero root: re-pin
        std::vector<Cx> theta = pin;
        theta[pivot] = best;
        // residual of the full equation
        Cx sum(0.0, 0.0);
        for (const auto& [deg, v] : live) {
            Cx c = v;
            for (int j = 0; j < nv; ++j)
                for (int e = 0; e < deg[j]; ++e) c *= theta[j];
            sum += c;
        }
        if (std::abs(sum) < 1e-9) return {theta, std::abs(sum), attempt};
    }
    throw NoNonzeroRoot("solve_theta: no nonzero root after 8 pinnings");
}

Cx suggest_alpha(const DirichletPolynomial& P, const ComplexRect& rect) {
    Cx best(0.0, 0.0);
    double best_score = -1.0;
    const int grid = 10;  // 10 x 10 = 100 sample points
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            Cx s(rect.sigma_min + rect.width() * (i + 0.5) / grid,
                 rect.t_min + rect.height() * (j + 0.5) / grid);
            double largest = 0.0, second = 0.0;
            for (const auto& [deg, coeff] : P.terms()) {
                double m = std::abs(ds_eval(coeff, s).value);
                if (m > largest) {
                    second = largest;
                    largest = m;
                } else if (m > second) {
                    second = m;
                }
            }
            if (second > best_score) {
                best_score = second;
                best = s;
            }
        }
    }
    if (best_score <= 1e-6)
        throw DegenerateAtAlpha(
            "suggest_alpha: no sample point has two coefficients above 1e-6");
    return best;
}

AnalyticFunction aux_monomial_target(Cx alpha, int k) {
    if (std::abs(alpha) < 1e-300) throw ZeroAlpha("aux_monomial_target: alpha must be nonzero");
    if (k < 1) throw std::invalid_argument("aux_monomial_target: k >= 1 required");
    AnalyticFunction f;
    f.name = "aux_monomial_target";
    double sign = (k % 2 == 1) ? 1.0 : -1.0;
    double kk = std::pow(static_cast<double>(k), k - 1);
    Cx pref = sign * kk * std::pow(alpha, -k);
    double kd = static_cast<double>(k);
    f.eval = [pref, alpha, kd](Cx s) {
        return pref * std::exp(-kd * s / alpha) * (kd * alpha - kd * s);
    };
    // jets d^j/ds^j of d^k/ds^k s e^{eta s} with eta = -k/alpha:
    // f^{(k+j)}(s) = eta^{k+j-1} e^{eta s} (k + j + eta s)
    Cx eta = -kd / alpha;
    f.jet = [eta, kd](Cx s, int max_j) {
        std::vector<Cx> out(max_j + 1);
        Cx e = std::exp(eta * s);
        Cx etap = std::pow(eta, kd - 1.0);
        for (int j = 0; j <= max_j; ++j) {
            out[j] = etap * e * (kd + j + eta * s);
            etap *= eta;
        }
        return out;
    };
    f.max_derivative_order = 32;
    return f;
}

AnalyticFunction aux_poly_target(const DirichletPolynomial& P, Cx alpha) {
    ThetaSolution th = solve_theta(P, alpha);
    // The theta conditions pin derivatives 0..l of f at alpha. A degree-l
    // interpolant can collapse A to the zero function (linear P with
    // proportional coefficients); appending one free jet value raises the
    // interpolation degree without disturbing the pinned derivatives.
    for (int extend = 0; extend < 2; ++extend) {
        Jet jet{th.theta};
        if (extend) {
            double scale = 0.0;
            for (Cx t : th.theta) scale = std::max(scale, std::abs(t));
            jet.values.push_back(Cx(1.0, 0.5) * scale);
        }
        ExpPolyTarget f = jet_log_solve(jet, alpha);
        ComposedFunction comp{P, f.as_function(), 0.0};
        AnalyticFunction a = as_analytic(comp);
        a.name = "aux_poly_target";
        if (extend == 0) {
            double probe_r = 0.01 * (1.0 + std::abs(alpha));
            double largest = 0.0;
            for (int q = 0; q < 4; ++q) {
                Cx dir(q == 0 ? 1.0 : q == 2 ? -1.0 : 0.0, q == 1 ? 1.0 : q == 3 ? -1.0 : 0.0);
                largest = std::max(largest, std::abs(a.eval(alpha + probe_r * dir)));
            }
            if (largest < 1e-12) continue;  // identically-zero direction: extend
        }
        return a;
    }
    throw NoNonzeroRoot("aux_poly_target: target degenerates even after jet extension");
}

RoucheCertificate rouche_check(const AnalyticFunction& Z, const AnalyticFunction& A,
                               const Disk& disk, int samples) {
    RoucheCertificate cert;
    cert.disk = disk;
    int n = std::max(samples, 16);
    double max_diff = 0.0, min_target = 0.0;
    for (int round = 0;; ++round) {
        double md = 0.0, mt = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            double t = kTwoPi * i / n;
            Cx s = disk.center + disk.radius * Cx(std::cos(t), std::sin(t));
            Cx a = A.eval(s);
            Cx z = Z.eval(s);
            md = std::max(md, std::abs(z - a));
            mt = std::min(mt, std::abs(a));
        }
        cert.samples += n;
        if (mt == 0.0)
            throw TargetVanishesOnCircle("rouche_check: target vanishes at a sample");
        bool stable = round > 0 && std::abs(md - max_diff) <= 0.01 * std::max(1e-300, md) &&
                      std::abs(mt - min_target) <= 0.01 * mt;
        max_diff = md;
        min_target = mt;
        if (stable || n >= 16384) break;
        n *= 2;
    }
    cert.max_diff = max_diff;
    cert.min_target = min_target;
    cert.pass = max_diff < min_target;
    if (cert.pass) {
        // soundness: equal winding numbers, by direct computation
        SamplingPolicy pol;
        WindingResult wz = winding_number(Z, Contour(disk), pol);
        WindingResult wa = winding_number(A, Contour(disk), pol);
        if (wz.winding != wa.winding) cert.pass = false;  // sampling misled us
    }
    return cert;
}

TauScanResult tau_scan(const ComposedFunction& F, const AnalyticFunction& A, const Disk& disk,
                       double tau_lo, double tau_hi, double step, int workers,
                       const std::function<void(const RoucheCertificate&)>& on_certificate) {
    if (!(step > 0.0)) throw std::invalid_argument("tau_scan: step > 0 required");
    std::size_t n = static_cast<std::size_t>(std::floor((tau_hi - tau_lo) / step + 1e-9)) + 1;
    std::vector<RoucheCertificate> certs(n);
    parallel_for(n, workers, [&](std::size_t i) {
        double tau = tau_lo + step * static_cast<double>(i);
        ComposedFunction shifted = F;
        shifted.tau = F.tau + tau;
        AnalyticFunction Z = as_analytic(shifted);
        RoucheCertificate c;
        try {
            c = rouche_check(Z, A, disk);
        } catch (const NumericError&) {
            c.disk = disk;
            c.pass = false;
        }
        c.tau = tau;
        if (c.pass) {
            // localize the zero of the shifted function inside the disk
            ComplexRect box(disk.center.real() - disk.radius, disk.center.real() + disk.radius,
                            disk.center.imag() - disk.radius, disk.center.imag() + disk.radius);
            try {
                ZeroReport rep = localize_zeros(Z, box, 1e-8);
                for (const auto& z : rep.zeros)
                    if (disk.contains(z.location)) {
                        c.zero_inside = z;
                        break;
                    }
            } catch (const NumericError&) {
            }
        }
        certs[i] = std::move(c);
    });

    TauScanResult out;
    std::size_t hits = 0;
    for (auto& c : certs) {
        if (on_certificate) on_certificate(c);
        if (c.pass) {
            ++hits;
            if (c.zero_inside) {
                LocatedZero mapped = *c.zero_inside;
                mapped.location += Cx(0.0, c.tau + F.tau);
                // verify against the unshifted composition
                mapped.residual = std::abs(eval_composed(F, mapped.location - Cx(0.0, F.tau)));
                out.mapped_zeros.push_back(mapped);
            }
        }
    }
    out.hit_fraction = n > 0 ? static_cast<double>(hits) / static_cast<double>(n) : 0.0;
    out.certificates = std::move(certs);
    return out;
}

std::vector<double> align_search(const std::vector<double>& lambdas, int M, double delta,
                                 double tau_lo, double tau_hi, double step) {
    if (!(delta > 0.0) || !(delta < 0.5))
        throw std::invalid_argument("align_search: delta in (0, 1/2) required");
    if (lambdas.empty()) throw std::invalid_argument("align_search: lambdas nonempty");
    if (M < 1) throw std::invalid_argument("align_search: M >= 1 required");
    if (!(step > 0.0)) throw std::invalid_argument("align_search: step > 0 required");
    std::vector<double> hits;
    std::size_t n = static_cast<std::size_t>(std::floor((tau_hi - tau_lo) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < n; ++i) {
        double tau = tau_lo + step * static_cast<double>(i);
        double worst = 0.0;
        for (double l : lambdas) {
            double x = tau * l / (kTwoPi * M);
            worst = std::max(worst, std::abs(x - std::round(x)));
            if (worst >= delta) break;
        }
        if (worst < delta) hits.push_back(tau);
    }
    return hits;
}

}  // namespace polyzeta
