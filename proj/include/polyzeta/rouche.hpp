#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "polyzeta/contour.hpp"
#include "polyzeta/dirichlet_poly.hpp"
#include "polyzeta/types.hpp"

namespace polyzeta {

// Derivatives c_0..c_m of a function at a point, c_0 != 0 for jet-log input.
struct Jet {
    std::vector<Cx> values;
};

// f(s) = exp(sum_j b_j (s - center)^j); nonvanishing by construction.
struct ExpPolyTarget {
    Cx center;
    std::vector<Cx> coeffs;  // b_0..b_m

    Cx eval(Cx s) const;
    std::vector<Cx> jet_at(Cx s, int max_k) const;  // derivatives 0..max_k
    AnalyticFunction as_function(int max_order = 32) const;
};

// Solve for b with d^n/ds^n [exp(p_m)](0) = c_n: formal-power-series log,
// b_0 on the principal branch.
ExpPolyTarget jet_log_solve(const Jet& c, Cx center = Cx(0.0, 0.0));

struct ThetaSolution {
    std::vector<Cx> theta;  // theta_0..theta_l, all nonzero
    double residual;        // |sum D_d(alpha) theta^d|
    int pinned_attempts;    // re-pinning rounds used
};

// Nonzero theta with sum_d D_d(alpha) theta_0^{d_0}...theta_l^{d_l} = 0.
// Pins theta_1..theta_l, solves the univariate polynomial in theta_0
// (Durand-Kerner), re-pins deterministically on failure.
ThetaSolution solve_theta(const DirichletPolynomial& P, Cx alpha);

// Suggest a target center: samples 100 points of the rectangle and returns
// the one maximizing the second-largest coefficient magnitude, requiring at
// least two coefficients above 1e-6 there.
Cx suggest_alpha(const DirichletPolynomial& P, const ComplexRect& rect);

// A(s, alpha, k) = d^k/ds^k s e^{-k s/alpha}
//               = (-1)^{k-1} k^{k-1} alpha^{-k} e^{-k s/alpha} (k alpha - k s);
// simple zero at s = alpha.
AnalyticFunction aux_monomial_target(Cx alpha, int k);

// A(s, alpha; f) with f = exp(p) built from the theta jet at alpha: the
// polynomial's coefficients at s times powers of f's derivatives; vanishes at
// alpha by construction.
AnalyticFunction aux_poly_target(const DirichletPolynomial& P, Cx alpha);

struct RoucheCertificate {
    Disk disk;
    double tau = 0.0;
    double max_diff = 0.0;    // max |Z - A| over the circle
    double min_target = 0.0;  // min |A| over the circle
    bool pass = false;
    std::optional<LocatedZero> zero_inside;  // zero of the shifted function
    long long samples = 0;
};

// Samples the circle, refines x2 until max/min stabilize; on pass verifies
// winding(Z) == winding(A) by direct computation.
RoucheCertificate rouche_check(const AnalyticFunction& Z, const AnalyticFunction& A,
                               const Disk& disk, int samples = 256);

struct TauScanResult {
    std::vector<RoucheCertificate> certificates;  // sorted by tau
    double hit_fraction = 0.0;
    // zeros of the unshifted composition, mapped from passing certificates
    std::vector<LocatedZero> mapped_zeros;
};

// Evaluates rouche_check on the tau grid; for each pass localizes the zero of
// the shifted function and maps it to location + i*tau. on_certificate (if
// set) streams certificates in tau order.
TauScanResult tau_scan(const ComposedFunction& F, const AnalyticFunction& A, const Disk& disk,
                       double tau_lo, double tau_hi, double step, int workers = 1,
                       const std::function<void(const RoucheCertificate&)>& on_certificate = {});

// Grid tau in range with max_j || tau * lambda_j / (2 pi M) || < delta,
// ||.|| the distance to the nearest integer.
std::vector<double> align_search(const std::vector<double>& lambdas, int M, double delta,
                                 double tau_lo, double tau_hi, double step);

}  // namespace polyzeta
