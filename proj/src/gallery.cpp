#include "polyzeta/gallery.hpp"

#include <cmath>

#include "polyzeta/zeta.hpp"

namespace polyzeta {
namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

const std::vector<GalleryEntry>& entries() {
    static const std::vector<GalleryEntry> list = {
        {"zeta",
         "Riemann zeta function; simple pole at s = 1.",
         {},
         {{ComplexRect(0.51, 0.99, 0.0, 100.0), "==", 0, "no zeros off the critical line at desk heights"}}},
        {"zeta_derivative",
         "k-th derivative of zeta; pole of order k+1 at s = 1. Parameter k (default 1).",
         {{"k", 1.0}},
         {{ComplexRect(1e-4, 0.5, 0.0, 200.0), "==", 0, "zero-free strip left of 1/2 (k=1)"}}},
        {"zeta_wronskian",
         "zeta(s) zeta''(s) - zeta'(s)^2; pole of order 4 at s = 1.",
         {},
         {{ComplexRect(0.51, 0.99, 0.0, 400.0), ">", 0, "zeros appear in the strip"}}},
        {"height_zeta",
         "Height zeta function of m-dimensional projective space over Q: "
         "(1/zeta(s)) sum_n binom(m+1, 2n+1) 2^{m-2n} zeta(s - m + 2n). Parameter m <= 6.",
         {{"m", 1.0}},
         {}},
        {"zeta_plus_linear",
         "zeta(s) + C s. Parameters C_re, C_im (default 8 - 8i).",
         {{"C_re", 8.0}, {"C_im", -8.0}},
         {{ComplexRect(0.2, 2.0, 0.0, 200.0), "==", 0, "zero-free for the default C"}}},
        {"zeta_shift_ratio",
         "s - 1 + sign * 2 pi zeta(s-1)/zeta(s+1); zeros on Re s = 1/2. Parameter sign (+1/-1).",
         {{"sign", 1.0}},
         {{ComplexRect(0.55, 1.45, 0.0, 50.0), "==", 0, "no zeros right of the line"},
          {ComplexRect(-0.45, 0.45, 0.0, 50.0), "==", 0, "no zeros left of the line"},
          {ComplexRect(0.45, 0.55, 0.0, 50.0), ">", 0, "zeros on the line"}}},
        {"lattice_twist",
         "(1 - 9^{9(s - 3/4)}) zeta(s) + 2: the subtracted-constant function has a zero in "
         "every vertical shift of the disk |s - 3/4| <= 0.2.",
         {},
         {}},
        {"exp_zeta",
         "exp(zeta(s)): nonvanishing composition (not a finite-degree polynomial in zeta).",
         {},
         {{ComplexRect(0.55, 0.95, 0.0, 100.0), "==", 0, "no zeros in the strip"}}},
    };
    return list;
}

}  // namespace

std::vector<std::string> gallery_list() {
    std::vector<std::string> names;
    for (const auto& e : entries()) names.push_back(e.name);
    return names;
}

const GalleryEntry& gallery_describe(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return e;
    throw UnknownEntry("gallery: unknown entry '" + name + "'");
}

AnalyticFunction gallery_build(const std::string& name,
                               const std::map<std::string, double>& params) {
    const GalleryEntry& entry = gallery_describe(name);
    for (const auto& [key, value] : params)
        if (!entry.default_params.count(key))
            throw ParamOutOfRange("gallery_build: unknown parameter '" + key + "' for " + name);
    ZetaParams zp;

    if (name == "zeta") return make_zeta_function(zp);

    if (name == "zeta_derivative") {
        double kd = get_param(params, "k", 1.0);
        int k = static_cast<int>(kd);
        if (k < 1 || k > 8 || kd != k)
            throw ParamOutOfRange("zeta_derivative: k must be an integer in 1..8");
        return make_zeta_derivative_function(k, zp);
    }

    if (name == "zeta_wronskian") {
        AnalyticFunction f;
        f.name = "zeta_wronskian";
        f.eval = [zp](Cx s) {
            auto j = zeta_jet(s, 2, zp);
            return j[0] * j[2] - j[1] * j[1];
        };
        f.poles = {{Cx(1.0, 0.0), 4}};
        f.domain = ComplexRect(-23.0, 100.0, -2100.0, 2100.0);
        return f;
    }

    if (name == "height_zeta") {
        double md = get_param(params, "m", 1.0);
        int m = static_cast<int>(md);
        if (m < 1 || m > 6 || md != m)
            throw ParamOutOfRange("height_zeta: m must be an integer in 1..6");
        AnalyticFunction f;
        f.name = "height_zeta_" + std::to_string(m);
        f.eval = [zp, m](Cx s) {
            Cx acc(0.0, 0.0);
            for (int n = 0; 2 * n <= m; ++n)
                acc += binomial(m + 1, 2 * n + 1) * std::pow(2.0, m - 2 * n) *
                       zeta(s - static_cast<double>(m - 2 * n), zp);
            return acc * zeta_reciprocal(s, zp);
        };
        for (int n = 0; 2 * n <= m; ++n)
            f.poles.push_back({Cx(static_cast<double>(m + 1 - 2 * n), 0.0), 1});
        // validated window: zeta(s) != 0 keeps the 1/zeta factor pole-free
        f.domain = m >= 2 ? ComplexRect(m - 0.5, static_cast<double>(m), -2000.0, 2000.0)
                          : ComplexRect(1.5, 100.0, -2000.0, 2000.0);
        return f;
    }

    if (name == "zeta_plus_linear") {
        Cx C(get_param(params, "C_re", 8.0), get_param(params, "C_im", -8.0));
        AnalyticFunction f;
        f.name = "zeta_plus_linear";
        f.eval = [zp, C](Cx s) { return zeta(s, zp) + C * s; };
        f.poles = {{Cx(1.0, 0.0), 1}};
        f.domain = ComplexRect(-23.0, 100.0, -2100.0, 2100.0);
        return f;
    }

    if (name == "zeta_shift_ratio") {
        double sign = get_param(params, "sign", 1.0);
        if (sign != 1.0 && sign != -1.0)
            throw ParamOutOfRange("zeta_shift_ratio: sign must be +1 or -1");
        AnalyticFunction f;
        f.name = sign > 0 ? "zeta_shift_ratio_plus" : "zeta_shift_ratio_minus";
        f.eval = [zp, sign](Cx s) {
            // s = 0 is removable: zeta(s+1) ~ 1/s makes the ratio vanish there
            if (std::abs(s) < 1e-12)
                return (s - 1.0) + sign * 2.0 * 3.14159265358979323846 * zeta(s - 1.0, zp) * s;
            return (s - 1.0) + sign * 2.0 * 3.14159265358979323846 * zeta(s - 1.0, zp) /
                                   zeta(s + 1.0, zp);
        };
        // zeta(s-1) contributes a simple pole at s = 2; zeros of zeta(s+1)
        // (Re s = -1/2 at desk heights) are outside the declared domain.
        f.poles = {{Cx(2.0, 0.0), 1}};
        f.domain = ComplexRect(-0.45, 100.0, -2000.0, 2000.0);
        return f;
    }

    if (name == "lattice_twist") {
        AnalyticFunction f;
        f.name = "lattice_twist";
        const double lg9 = 9.0 * std::log(9.0);
        f.eval = [zp, lg9](Cx s) {
            Cx twist = std::exp(lg9 * (s - 0.75));
            return (Cx(1.0, 0.0) - twist) * zeta(s, zp) + Cx(2.0, 0.0);
        };
        f.poles = {{Cx(1.0, 0.0), 1}};
        f.domain = ComplexRect(-23.0, 100.0, -2100.0, 2100.0);
        return f;
    }

    if (name == "exp_zeta") {
        AnalyticFunction f;
        f.name = "exp_zeta";
        f.eval = [zp](Cx s) { return std::exp(zeta(s, zp)); };
        // essential singularity at s = 1: keep the handle's domain away from it
        f.domain = ComplexRect(-5.0, 0.9999, -2100.0, 2100.0);
        return f;
    }

    throw UnknownEntry("gallery_build: no builder for '" + name + "'");
}

ZeroReport lattice_twist_disk_check(double tau, const SamplingPolicy& policy) {
    ZetaParams zp;
    const double lg9 = 9.0 * std::log(9.0);
    AnalyticFunction f;
    f.name = "lattice_twist_minus_2";
    f.eval = [zp, lg9, tau](Cx s) {
        Cx w = s + Cx(0.0, tau);
        Cx twist = std::exp(lg9 * (w - 0.75));
        return (Cx(1.0, 0.0) - twist) * zeta(w, zp);
    };
    f.poles = {{Cx(1.0, -tau), 1}};
    f.domain = ComplexRect(-23.0, 100.0, -2100.0 - tau, 2100.0 - tau);
    // radius: any value in (pi/log(9^9), 1/4) works; 0.2 recorded in config
    return count_zeros(f, Contour(Disk(Cx(0.75, 0.0), 0.2)), policy);
}

}  // namespace polyzeta
