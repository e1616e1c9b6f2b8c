#pragma once

#include "polyzeta/types.hpp"

namespace polyzeta {

struct SamplingPolicy {
    int initial_per_edge = 64;     // rectangle edges (minimum)
    int initial_circle = 256;      // full circle (minimum)
    // extra initial density per unit of contour length: long edges at desk
    // heights rotate many turns, and equal-modulus 2*pi slips are invisible
    // to pairwise phase checks
    double samples_per_unit = 32.0;
    double max_phase_step = 1.5707963267948966;  // pi/2
    long long sample_budget = 1 << 20;
    double boundary_zero_threshold = 1e-9;
};

struct WindingResult {
    int winding = 0;
    double raw_turns = 0.0;          // phase sum / 2pi before rounding
    double boundary_min_modulus = 0.0;
    long long samples_used = 0;
};

// Integer winding number of f along the positively oriented boundary.
// Adaptive: segments are split until consecutive phase samples differ by less
// than policy.max_phase_step. Throws BoundaryZero / NonConvergence.
WindingResult winding_number(const AnalyticFunction& f, const Contour& boundary,
                             const SamplingPolicy& policy = {});

// Argument-principle zero count (with multiplicity), declared poles subtracted.
// Boundary zeros/poles trigger outward perturbation retries per offsets
// {1e-4, 3e-4, 1e-3, 3e-3}; the adjusted region is recorded in the report.
ZeroReport count_zeros(const AnalyticFunction& f, const Contour& region,
                       const SamplingPolicy& policy = {});
ZeroReport count_zeros_rect(const AnalyticFunction& f, const ComplexRect& region,
                            const SamplingPolicy& policy = {});

// count_zeros_rect + recursive quadrisection + Newton refinement.
// Multiplicity = winding number of the isolating disk of radius <= tol*10.
// Unresolved clusters are reported as one multiple zero and counted in
// report.unresolved_clusters.
ZeroReport localize_zeros(const AnalyticFunction& f, const ComplexRect& region,
                          double tol = 1e-8, const SamplingPolicy& policy = {});

// f^{(k)}(s) by trapezoidal quadrature of the Cauchy integral over a circle.
// radius <= 0 selects the default: half the distance to the nearest declared
// pole or domain edge, capped at 0.25. Node count starts at 64 and doubles
// until two successive results agree to 1e-11 relative.
Cx cauchy_derivative(const AnalyticFunction& f, Cx s, int k, double radius = 0.0);

// Derivative of f at s of order k: analytic jet when the handle provides one,
// Cauchy quadrature otherwise.
Cx nth_derivative(const AnalyticFunction& f, Cx s, int k, double radius = 0.0);

// k! 2^k eps / (r' - r)^k: sup-bound on |f^{(k)} - g^{(k)}| on the inner disk,
// given sup-bound eps on the middle disk of two concentric disks r < r'.
double derivative_error_bound(double eps, double r, double r_prime, int k);

}  // namespace polyzeta
