// Acceptance suite: every criterion prints one PASS/FAIL line with its
// measured numbers and timing; the process exits nonzero if any criterion
// fails. Heavy criteria honor POLYZETA_WORKERS (default: hardware threads).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "polyzeta/counting.hpp"
#include "polyzeta/expr.hpp"
#include "polyzeta/gallery.hpp"
#include "polyzeta/rouche.hpp"
#include "polyzeta/zeta.hpp"
#include "support/oracles.hpp"

using namespace polyzeta;

namespace {

int g_workers = 1;
int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void finish(bool pass, const std::string& detail) {
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
        std::ostringstream line;
        line << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number_ << ": " << title_
             << " -- " << detail << " (" << elapsed.count() << " s)";
        std::cout << line.str() << std::endl;
        if (!pass) ++g_failures;
    }

    void fail_exception(const std::exception& e) { finish(false, std::string("exception: ") + e.what()); }

private:
    int number_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
};

// --- criterion 1: zeta engine accuracy ------------------------------------
void criterion_1() {
    Criterion c(1, "zeta engine accuracy vs eta-series oracle");
    try {
        std::mt19937 rng(20260809);
        std::uniform_real_distribution<double> sig(0.4, 4.0), tt(-2000.0, 2000.0);
        double worst = 0.0;
        for (int i = 0; i < 500; ++i) {
            Cx s;
            do {
                s = Cx(sig(rng), tt(rng));
            } while (oracles::eta_denominator(s) < 0.1);
            worst = std::max(worst, std::abs(zeta(s) - oracles::zeta_via_eta(s)));
        }
        double basel = std::abs(zeta(Cx(2.0, 0.0)) - 3.14159265358979323846 * 3.14159265358979323846 / 6.0);
        bool pass = worst < 1e-10 && basel < 1e-12;
        std::ostringstream d;
        d << "max |zeta - oracle| = " << worst << " over 500 points (need < 1e-10), "
          << "|zeta(2) - pi^2/6| = " << basel << " (need < 1e-12)";
        c.finish(pass, d.str());
    } catch (const std::exception& e) {
        c.fail_exception(e);
    }
}

// --- criterion 2: zero counting soundness ----------------------------------
void criterion_2() {
    Criterion c(2, "argument-principle counting soundness");
    try {
        std::mt19937 rng(20260809);
        std::uniform_real_distribution<double> coord(-2.0, 2.0);
        std::uniform_int_distribution<int> degree(1, 6);
        int exact = 0;
        const int trials = 200;
        for (int trial = 0; trial < trials; ++trial) {
            int deg = degree(rng);
            std::vector<Cx> roots;
            for (int i = 0; i < deg; ++i) roots.emplace_back(coord(rng), coord(rng));
            AnalyticFunction f = oracles::product_polynomial(roots);
            for (;;) {
                double x0 = coord(rng), x1 = coord(rng), y0 = coord(rng), y1 = coord(rng);
                if (x1 < x0) std::swap(x0, x1);
                if (y1 < y0) std::swap(y0, y1);
                if (x1 - x0 < 0.2 || y1 - y0 < 0.2) continue;
                ComplexRect rect(x0, x1, y0, y1);
                bool near_edge = false;
                long long inside = 0;
                for (Cx r : roots) {
                    double d = std::min(std::min(std::abs(r.real() - x0), std::abs(r.real() - x1)),
                                        std::min(std::abs(r.imag() - y0), std::abs(r.imag() - y1)));
                    if (d < 1e-2) near_edge = true;
                    if (rect.contains(r)) ++inside;
                }
                if (near_edge) continue;
                if (count_zeros_rect(f, rect).count == inside) ++exact;
                break;
            }
        }
        long long zc = count_zeros_rect(make_zeta_function(), ComplexRect(0.0, 1.0, 0.0, 100.0)).count;
        std::size_t oracle_count = oracles::critical_line_zeros(10.0, 100.0).size();
        bool pass = exact == trials && zc == 29 && oracle_count == 29;
        std::ostringstream d;
        d << exact << "/" << trials << " random polynomials exact; zeta count [0,1]x[0,100] = "
          << zc << ", line-scan oracle = " << oracle_count << " (need 29 = 29)";
        c.finish(pass, d.str());
    } catch (const std::exception& e) {
        c.fail_exception(e);
    }
}

// --- criterion 3: Berndt main term -----------------------------------------
void criterion_3() {
    Criterion c(3, "N_k(200) near the Berndt main term, k = 1 and 2");
    try {
        double main_term = berndt_main_term(200.0);
        double band = 5.0 * std::log(200.0);
        ComplexRect rect(-1.0, 4.0, 0.0, 200.0);
        long long n1 = count_zeros_rect(make_zeta_derivative_function(1), rect).count;
        long long n2 = count_zeros_rect(make_zeta_derivative_function(2), rect).count;
        bool pass = std::abs(n1 - main_term) < band && std::abs(n2 - main_term) < band;
        std::ostringstream d;
        d << "N_1(200) = " << n1 << ", N_2(200) = " << n2 << ", main term = " << main_term
          << ", band = +-" << band;
        c.finish(pass, d.str());
    } catch (const std::exception& e) {
        c.fail_exception(e);
    }
}

// --- criterion 4: Speiser zone ----------------------------------------------
void criterion_4() {
    Criterion c(4, "zeta' zero-free in (0, 1/2) x (0, 200)");
    try {
        long long n =
            count_zeros_rect(make_zeta_derivative_function(1), ComplexRect(1e-4, 0.5, 0.0, 200.0))
                .count;
        c.finish(n == 0, "count = " + std::to_string(n) + " (need 0)");
    } catch (const std::exception& e) {
        c.fail_exception(e);
    }
}

// --- criterion 5: Levinson-Montgomery weighted sum --------------------------
void criterion_5() {
    Criterion c(5, "2 pi sum (beta - 1/2) for zeta' at T = 100");
    try {
        ZeroReport zeros =
            localize_zeros(make_zeta_derivative_function(1), ComplexRect(-1.0, 4.0, 0.0, 100.0));
        LmSum lm = lm_weighted_sum(1, 100.0, zeros);
        double band = 5.0 * std::log(100.0);
        bool pass = std::abs(lm.empirical - lm.predicted) < band;
        std::ostringstream d;
        d << "empirical = " << lm.empirical << ", predicted = " << lm.predicted << ", band = +-"
          << band << ", zeros used = " << lm.zeros_used;
        c.finish(pass, d.str());
    } catch (const std::exception& e) {
        c.fail_exception(e);
    }
}

// --- criterion 6: mean values -----------------------------------------------
void criterion_6() {
    Criterion c(6, "Ingham and mean-square values at T = 2000");
    try {
        MeanValueResult i00 = ingham_integral(0, 0, 0.8, 0.8, 2000.0, g_workers);
        MeanValueResult i10 = ingham_integral(1, 0, 0.8, 0.8, 2000.0, g_workers);
        std::vector<Cx> ones(10000, Cx(1.0, 0.0));
        GeneralDirichletSeries pz = GeneralDirichletSeries::make_ordinary(ones, 0.0, 1.0, 0.0);
        MeanValueResult ms = mean_square_integral(make_zeta_function(), 0.75, 2000.0, &pz, g_workers);
        bool pass = i00.rel_error < 0.10 && i10.rel_error < 0.15 && ms.rel_error < 0.10;
        std::ostringstream d;
        d << "ingham(0,0) rel = " << i00.rel_error << " (<0.10), ingham(1,0) rel = "
          << i10.rel_error << " (<0.15), mean-square rel = " << ms.rel_error << " (<0.10)";
        c.finish(pass, d.str());
    } catch (const std::exception& e) {
        c.fail_exception(e);
    }
}

// --- criterion 7: density behavior ------------------------------------------
void criterion_7() {
    Criterion c(7, "strip densities: growth for zeta', zeta+zeta', wronskian; emptiness for exp(zeta), zeta+Cs");
    try {
        std::vector<double> Ts = {100.0, 200.0, 400.0};
        auto growing = [&](const AnalyticFunction& f, std::string& detail) {
            DensitySweep s = density_sweep(f, 0.51, 0.99, Ts, g_workers);
            std::ostringstream d;
            d << f.name << " counts";
            bool ok = true;
            for (std::size_t i = 0; i < s.counts.size(); ++i) {
                d << " " << s.counts[i];
                if (s.counts[i] < 0 || (i > 0 && s.counts[i] <= s.counts[i - 1])) ok = false;
            }
            d << " slope " << s.fit.slope;
            if (s.fit.slope <= 0.0) ok = false;
            detail += d.str() + "; ";
            return ok;
        };
        auto empty_counts = [&](const AnalyticFunction& f, double lo, double hi,
                                std::string& detail) {
            DensitySweep s = density_sweep(f, lo, hi, Ts, g_workers);
            bool ok = true;
            std::ostringstream d;
            d << f.name << " counts";
            for (long long n : s.counts) {
                d << " " << n;
                if (n != 0) ok = false;
            }
            detail += d.str() + "; ";
            return ok;
        };
        std::string detail;
        AnalyticFunction z1 = make_zeta_derivative_function(1);
        AnalyticFunction combo = as_analytic(parse_expression("D1 + D0"));
        combo.name = "zeta'+zeta";
        AnalyticFunction mu = gallery_build("zeta_wronskian");
        AnalyticFunction expz = gallery_build("exp_zeta");
        AnalyticFunction g = gallery_build("zeta_plus_linear");
        bool pass = growing(z1, detail);
        pass = growing(combo, detail) && pass;
        pass = growing(mu, detail) && pass;
        // exp(zeta)'s claim window avoids the corner at s = 1 where its
        // modulus is double-exponentially small
        pass = empty_counts(expz, 0.55, 0.95, detail) && pass;
        pass = empty_counts(g, 0.51, 0.99, detail) && pass;
        c.finish(pass, detail);
    } catch (const std::exception& e) {
        c.fail_exception(e);
    }
}

// --- criterion 8: the Rouche pipeline ----------------------------------------
void criterion_8() {
    Criterion c(8, "tau-scan finds a certificate for zeta' and maps verified zeros");
    try {
        // Tuned demo configuration (recorded in run metadata): the scanned
        // function is zeta', the comparison target is the k=2 monomial target
        // whose derivative at its zero matches zeta'' at a strip zero of zeta'.
        Cx alpha(0.8646, 0.024);
        const double sigma1 = 0.51, sigma2 = 0.99;
        AnalyticFunction A = aux_monomial_target(alpha, 2);
        ComposedFunction F = parse_expression("D1");
        TauScanResult res = tau_scan(F, A, Disk(alpha, 0.1), 0.0, 500.0, 0.05, g_workers);
        long long passes = 0;
        for (const auto& cert : res.certificates)
            if (cert.pass) ++passes;
        bool zeros_ok = passes > 0;
        double worst_residual = 0.0;
        for (const auto& z : res.mapped_zeros) {
            Cx v = zeta_derivative(z.location, 1);
            worst_residual = std::max(worst_residual, std::abs(v));
            if (std::abs(v) >= 1e-6) zeros_ok = false;
            if (!(z.location.real() > sigma1 && z.location.real() < sigma2)) zeros_ok = false;
        }
        if (res.mapped_zeros.empty()) zeros_ok = false;
        bool pass = passes >= 1 && zeros_ok;
        std::ostringstream d;
        d << passes << " passing certificates over " << res.certificates.size()
          << " grid points, hit_fraction = " << res.hit_fraction << ", mapped zeros = "
          << res.mapped_zeros.size() << ", worst |zeta'(z)| = " << worst_residual
          << " (need < 1e-6, Re in (0.51, 0.99))";
        c.finish(pass, d.str());
    } catch (const std::exception& e) {
        c.fail_exception(e);
    }
}

// --- criterion 9: the jet-log solver ------------------------------------------
void criterion_9() {
    Criterion c(9, "jet-log solver round trips and the (2,3,5) case");
    try {
        ExpPolyTarget t = jet_log_solve(Jet{{Cx(2.0, 0.0), Cx(3.0, 0.0), Cx(5.0, 0.0)}});
        double exact = std::max({std::abs(t.coeffs[0] - Cx(std::log(2.0), 0.0)),
                                 std::abs(t.coeffs[1] - Cx(1.5, 0.0)),
                                 std::abs(t.coeffs[2] - Cx(0.125, 0.0))});
        std::mt19937 rng(20260809);
        std::uniform_real_distribution<double> mag(0.1, 10.0), ang(0.0, 6.283185307179586),
            other(-2.0, 2.0);
        std::uniform_int_distribution<int> order(1, 6);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            int m = order(rng);
            Jet jet;
            ExpPolyTarget target;
            for (;;) {
                jet.values.clear();
                double r = mag(rng), a = ang(rng);
                Cx c0(r * std::cos(a), r * std::sin(a));
                jet.values.push_back(c0);
                for (int i = 1; i <= m; ++i)
                    jet.values.push_back(std::abs(c0) * Cx(other(rng), other(rng)));
                target = jet_log_solve(jet);
                double mass = 0.0;
                for (std::size_t j = 1; j < target.coeffs.size(); ++j)
                    mass += std::abs(target.coeffs[j]);
                if (mass <= 8.0) break;
            }
            AnalyticFunction f = target.as_function();
            double scale = 0.0;
            for (Cx cv : jet.values) scale = std::max(scale, std::abs(cv));
            for (int k = 0; k <= m; ++k) {
                Cx got = cauchy_derivative(f, Cx(0.0, 0.0), k, 0.75);
                worst = std::max(worst, std::abs(got - jet.values[k]) / (1.0 + scale));
            }
        }
        bool pass = exact < 1e-12 && worst < 1e-9;
        std::ostringstream d;
        d << "(2,3,5) error = " << exact << " (<1e-12), worst round-trip rel = " << worst
          << " over 100 jets (<1e-9)";
        c.finish(pass, d.str());
    } catch (const std::exception& e) {
        c.fail_exception(e);
    }
}

// --- criterion 10: gallery claims ----------------------------------------------
void criterion_10() {
    Criterion c(10, "shift-ratio line claims, lattice-twist disk, height-zeta identity");
    try {
        std::ostringstream d;
        bool pass = true;
        for (double sign : {1.0, -1.0}) {
            AnalyticFunction f = gallery_build("zeta_shift_ratio", {{"sign", sign}});
            long long right = count_zeros_rect(f, ComplexRect(0.55, 1.45, 0.0, 50.0)).count;
            long long left = count_zeros_rect(f, ComplexRect(-0.45, 0.45, 0.0, 50.0)).count;
            long long band = count_zeros_rect(f, ComplexRect(0.45, 0.55, 0.0, 50.0)).count;
            if (right != 0 || left != 0 || band <= 0) pass = false;
            d << f.name << " right/left/band = " << right << "/" << left << "/" << band << "; ";
        }
        std::mt19937 rng(20260809);
        std::uniform_real_distribution<double> tau(0.0, 100.0);
        int disk_ok = 0;
        for (int i = 0; i < 20; ++i) {
            if (lattice_twist_disk_check(tau(rng)).count >= 1) ++disk_ok;
        }
        if (disk_ok != 20) pass = false;
        d << "lattice-twist disk hits = " << disk_ok << "/20; ";
        AnalyticFunction z1 = gallery_build("height_zeta", {{"m", 1.0}});
        std::uniform_real_distribution<double> sig(2.5, 4.0), tt(-10.0, 10.0);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            Cx s(sig(rng), tt(rng));
            Cx generic = z1.eval(s);
            Cx direct = 4.0 * zeta(s - 1.0) / zeta(s);
            worst = std::max(worst, std::abs(generic - direct) / (1.0 + std::abs(direct)));
        }
        if (worst >= 1e-10) pass = false;
        d << "height-zeta m=1 identity worst rel = " << worst << " (<1e-10)";
        c.finish(pass, d.str());
    } catch (const std::exception& e) {
        c.fail_exception(e);
    }
}

}  // namespace

int main() {
    const char* env = std::getenv("POLYZETA_WORKERS");
    if (env) g_workers = std::max(1, std::atoi(env));
    else {
        unsigned hw = std::thread::hardware_concurrency();
        g_workers = hw > 0 ? static_cast<int>(hw) : 1;
    }
    std::cout << "acceptance suite, workers = " << g_workers << std::endl;

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) FAILED" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
