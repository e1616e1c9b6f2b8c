#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "polyzeta/types.hpp"

// Test-side oracles, independent of the library's evaluation paths:
// the zeta oracle uses the alternating eta series (Euler-Maclaurin never
// enters), and the critical-line scan uses Hardy's Z built on that oracle.
namespace oracles {

using polyzeta::Cx;

// zeta(s) = eta(s) / (1 - 2^{1-s}); eta summed directly up to ~1.3|t| terms,
// tail accelerated by iterated averaging of partial sums. Valid for
// Re(s) > 0 away from the zeros of 1 - 2^{1-s}.
Cx zeta_via_eta(Cx s);

// |1 - 2^{1-s}|, the oracle's conditioning factor.
double eta_denominator(Cx s);

// Riemann-Siegel theta via the Stirling expansion (t >= 10).
double hardy_theta(double t);

// Hardy Z(t) = e^{i theta(t)} zeta(1/2 + i t), real for real t.
double hardy_z(double t);

// Ordinates of critical-line zeros in (t_lo, t_hi) located by sign changes of
// Z on a step-0.01 grid, refined by bisection.
std::vector<double> critical_line_zeros(double t_lo, double t_hi);

// k-th derivative of zeta at real sigma > 1, summed through eta jets and the
// derivative triangle of zeta * (1 - 2^{1-s}) = eta; ~1e-12 absolute.
Cx zeta_derivative_direct(double sigma, int k);

// Adaptive Simpson, used as the independent quadrature check.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10);

// Polynomial with the given roots as a product-form handle.
polyzeta::AnalyticFunction product_polynomial(const std::vector<Cx>& roots);

}  // namespace oracles
