#include <doctest.h>

#include <cmath>
#include <random>

#include "polyzeta/contour.hpp"
#include "polyzeta/expr.hpp"
#include "polyzeta/rouche.hpp"
#include "polyzeta/zeta.hpp"

using namespace polyzeta;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

TEST_CASE("jet_log_solve examples") {
    ExpPolyTarget t1 = jet_log_solve(Jet{{Cx(1.0, 0.0), Cx(0.0, 0.0), Cx(0.0, 0.0)}});
    for (Cx b : t1.coeffs) CHECK(std::abs(b) < 1e-15);

    ExpPolyTarget t2 = jet_log_solve(Jet{{Cx(1.0, 0.0), Cx(1.0, 0.0), Cx(1.0, 0.0)}});
    CHECK(std::abs(t2.coeffs[0]) < 1e-15);
    CHECK(std::abs(t2.coeffs[1] - Cx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(t2.coeffs[2]) < 1e-15);

    ExpPolyTarget t3 = jet_log_solve(Jet{{Cx(2.0, 0.0), Cx(3.0, 0.0), Cx(5.0, 0.0)}});
    CHECK(std::abs(t3.coeffs[0] - Cx(std::log(2.0), 0.0)) < 1e-12);
    CHECK(std::abs(t3.coeffs[1] - Cx(1.5, 0.0)) < 1e-12);
    CHECK(std::abs(t3.coeffs[2] - Cx(0.125, 0.0)) < 1e-12);

    CHECK_THROWS_AS(jet_log_solve(Jet{{Cx(0.0, 0.0), Cx(1.0, 0.0)}}), ZeroLeadingJet);
}

TEST_CASE("jet_log_solve round trip via cauchy derivatives") {
    std::mt19937 rng(20260809);
    std::uniform_real_distribution<double> mag(0.1, 10.0), ang(0.0, kTwoPi), other(-2.0, 2.0);
    std::uniform_int_distribution<int> order(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        int m = order(rng);
        Jet jet;
        ExpPolyTarget t;
        for (;;) {
            jet.values.clear();
            double r = mag(rng), a = ang(rng);
            Cx c0(r * std::cos(a), r * std::sin(a));
            jet.values.push_back(c0);
            // derivatives scale with |c_0| so the exponent polynomial stays
            // quadrature-friendly; resample heavy tails
            for (int i = 1; i <= m; ++i) jet.values.push_back(std::abs(c0) * Cx(other(rng), other(rng)));
            t = jet_log_solve(jet);
            double mass = 0.0;
            for (std::size_t j = 1; j < t.coeffs.size(); ++j) mass += std::abs(t.coeffs[j]);
            if (mass <= 8.0) break;
        }
        AnalyticFunction f = t.as_function();
        double scale = 0.0;
        for (Cx c : jet.values) scale = std::max(scale, std::abs(c));
        // differentiate exp(p) at 0 numerically and compare with the jet
        for (int k = 0; k <= m; ++k) {
            Cx got = cauchy_derivative(f, Cx(0.0, 0.0), k, 0.75);
            CHECK(std::abs(got - jet.values[k]) <= 1e-9 * (1.0 + scale));
        }
    }
}

TEST_CASE("solve_theta linear and quadratic") {
    ThetaSolution lin = solve_theta(parse_polynomial("D0 + D1"), Cx(0.7, 0.0));
    CHECK(std::abs(lin.theta[0] - Cx(-1.0, 0.0)) < 1e-12);
    CHECK(lin.residual < 1e-9);

    ThetaSolution quad = solve_theta(parse_polynomial("(2+0i)*D0^2 + (3+0i)*D1"), Cx(0.7, 0.0));
    double want = std::sqrt(1.5);
    CHECK(std::abs(std::abs(quad.theta[0].imag()) - want) < 1e-10);
    CHECK(std::abs(quad.theta[0].real()) < 1e-10);
    CHECK(quad.residual < 1e-9);
    for (Cx th : quad.theta) CHECK(std::abs(th) > 1e-8);

    CHECK_THROWS_AS(solve_theta(parse_polynomial("D0^2"), Cx(0.7, 0.0)), DegenerateAtAlpha);
}

TEST_CASE("suggest_alpha finds a two-coefficient point") {
    DirichletPolynomial p = parse_polynomial("D0 + D1");
    Cx alpha = suggest_alpha(p, ComplexRect(0.51, 0.99, 0.0, 10.0));
    CHECK(ComplexRect(0.51, 0.99, 0.0, 10.0).contains(alpha));
    CHECK_NOTHROW(solve_theta(p, alpha));

    // a polynomial whose second coefficient is identically zero cannot serve
    DirichletPolynomial lone = parse_polynomial("D1");
    CHECK_THROWS_AS(suggest_alpha(lone, ComplexRect(0.51, 0.99, 0.0, 10.0)),
                    DegenerateAtAlpha);
}

TEST_CASE("aux_monomial_target closed form") {
    Cx alpha(0.75, 0.0);
    AnalyticFunction A1 = aux_monomial_target(alpha, 1);
    CHECK(std::abs(A1.eval(alpha)) < 1e-14);
    // A(s) = e^{-s/alpha} (alpha - s)/alpha for k = 1
    Cx s(0.3, 0.2);
    Cx want = std::exp(-s / alpha) * (alpha - s) / alpha;
    CHECK(std::abs(A1.eval(s) - want) < 1e-13);

    AnalyticFunction A2 = aux_monomial_target(alpha, 2);
    CHECK(winding_number(A2, Contour(Disk(alpha, 0.1))).winding == 1);

    // A(0) = (-1)^{k-1} k^k alpha^{1-k}
    for (int k = 1; k <= 4; ++k) {
        Cx a(0.8, 0.35);
        AnalyticFunction A = aux_monomial_target(a, k);
        Cx expect = ((k % 2 == 1) ? 1.0 : -1.0) * std::pow(static_cast<double>(k), k) *
                    std::pow(a, 1.0 - k);
        CHECK(std::abs(A.eval(Cx(0.0, 0.0)) - expect) < 1e-11 * std::abs(expect));
        // also against cauchy differentiation of s e^{-k s / alpha}
        AnalyticFunction base;
        base.name = "s_exp";
        double kd = k;
        base.eval = [a, kd](Cx z) { return z * std::exp(-kd * z / a); };
        base.domain = ComplexRect(-10.0, 10.0, -10.0, 10.0);
        Cx via_cauchy = cauchy_derivative(base, Cx(0.0, 0.0), k, 0.4);
        CHECK(std::abs(A.eval(Cx(0.0, 0.0)) - via_cauchy) < 1e-9 * std::abs(expect));
    }

    CHECK_THROWS_AS(aux_monomial_target(Cx(0.0, 0.0), 1), ZeroAlpha);
}

TEST_CASE("aux_monomial_target jets are consistent") {
    Cx alpha(0.9, -0.2);
    AnalyticFunction A = aux_monomial_target(alpha, 2);
    Cx s(0.5, 0.1);
    auto jets = A.jet(s, 3);
    CHECK(std::abs(jets[0] - A.eval(s)) < 1e-13);
    for (int j = 1; j <= 3; ++j) {
        Cx num = cauchy_derivative(A, s, j, 0.4);
        CHECK(std::abs(jets[j] - num) < 1e-9 * std::max(1.0, std::abs(num)));
    }
}

TEST_CASE("aux_poly_target vanishes at alpha and encloses it") {
    DirichletPolynomial p = parse_polynomial("D0 + D1");
    Cx alpha(0.75, 2.0);
    AnalyticFunction A = aux_poly_target(p, alpha);
    CHECK(std::abs(A.eval(alpha)) < 1e-8);
    CHECK(winding_number(A, Contour(Disk(alpha, 0.05))).winding >= 1);
}

TEST_CASE("squared polynomial gives a double zero of the target") {
    // (X_0 - 1)^2 embedded with one derivative variable present
    DirichletPolynomial p = parse_polynomial("D0^2 - (2+0i)*D0 + (1+0i) + (0+0i)*D1");
    // the zero-coefficient D1 term is dropped; pad explicitly instead
    DirichletPolynomial padded = p.padded(2);
    Cx alpha(0.8, 1.0);
    AnalyticFunction A = aux_poly_target(padded, alpha);
    CHECK(std::abs(A.eval(alpha)) < 1e-8);
    WindingResult w = winding_number(A, Contour(Disk(alpha, 0.05)));
    CHECK(w.winding == 2);
}

TEST_CASE("rouche_check basics") {
    AnalyticFunction Z, A;
    Z.name = "s";
    Z.eval = [](Cx s) { return s; };
    Z.domain = ComplexRect(-5.0, 5.0, -5.0, 5.0);
    A.name = "s+0.1";
    A.eval = [](Cx s) { return s + 0.1; };
    A.domain = Z.domain;
    RoucheCertificate pass = rouche_check(Z, A, Disk(Cx(0.0, 0.0), 1.0));
    CHECK(pass.pass);
    CHECK(pass.max_diff == doctest::Approx(0.1));
    CHECK(pass.min_target == doctest::Approx(0.9).epsilon(0.01));

    AnalyticFunction Z2;
    Z2.name = "s+2";
    Z2.eval = [](Cx s) { return s + 2.0; };
    Z2.domain = Z.domain;
    AnalyticFunction A2;
    A2.name = "s";
    A2.eval = [](Cx s) { return s; };
    A2.domain = Z.domain;
    RoucheCertificate fail = rouche_check(Z2, A2, Disk(Cx(0.0, 0.0), 1.0));
    CHECK(!fail.pass);
}

TEST_CASE("tau_scan self-approximation passes at tau = 0") {
    // base := the target itself, so the shift tau=0 matches exactly
    Cx alpha(0.75, 0.5);
    ExpPolyTarget t = jet_log_solve(Jet{{Cx(1.0, 0.0), Cx(0.4, 0.2)}}, alpha);
    AnalyticFunction base = t.as_function();
    // Z = X_1 over base: Z(s) = base'(s); A := that same derivative
    DirichletPolynomial p = parse_polynomial("D1");
    ComposedFunction F{p, base, 0.0};
    AnalyticFunction A;
    A.name = "target_derivative";
    A.eval = [base](Cx s) { return base.jet(s, 1)[1]; };
    A.domain = base.domain;
    // base' = b1 * exp(...) never vanishes: certificate must pass at tau=0
    TauScanResult res = tau_scan(F, A, Disk(alpha, 0.1), 0.0, 1.0, 0.25);
    REQUIRE(!res.certificates.empty());
    CHECK(res.certificates[0].tau == 0.0);
    CHECK(res.certificates[0].pass);
    CHECK(res.certificates[0].max_diff <= 1e-12);
    CHECK(res.hit_fraction >= 1.0 / res.certificates.size());
}

TEST_CASE("tau_scan hit fraction shrinks with the disk for the synthetic case") {
    Cx alpha(0.75, 0.5);
    ExpPolyTarget t = jet_log_solve(Jet{{Cx(1.0, 0.0), Cx(0.4, 0.2)}}, alpha);
    AnalyticFunction base = t.as_function();
    DirichletPolynomial p = parse_polynomial("D1");
    ComposedFunction F{p, base, 0.0};
    AnalyticFunction A;
    A.name = "target_derivative";
    A.eval = [base](Cx s) { return base.jet(s, 1)[1]; };
    A.domain = base.domain;
    double prev = 2.0;
    for (double radius : {0.05, 0.1, 0.2}) {
        TauScanResult res = tau_scan(F, A, Disk(alpha, radius), 0.0, 2.0, 0.1);
        CHECK(res.hit_fraction <= prev + 1e-12);
        prev = res.hit_fraction;
    }
}

TEST_CASE("tau_scan results are identical across worker counts") {
    Cx alpha(0.75, 0.5);
    ExpPolyTarget t = jet_log_solve(Jet{{Cx(1.0, 0.0), Cx(0.4, 0.2)}}, alpha);
    AnalyticFunction base = t.as_function();
    DirichletPolynomial p = parse_polynomial("D1");
    ComposedFunction F{p, base, 0.0};
    AnalyticFunction A;
    A.name = "target_derivative";
    A.eval = [base](Cx s) { return base.jet(s, 1)[1]; };
    A.domain = base.domain;
    TauScanResult one = tau_scan(F, A, Disk(alpha, 0.1), 0.0, 2.0, 0.1, 1);
    TauScanResult four = tau_scan(F, A, Disk(alpha, 0.1), 0.0, 2.0, 0.1, 4);
    REQUIRE(one.certificates.size() == four.certificates.size());
    for (std::size_t i = 0; i < one.certificates.size(); ++i) {
        CHECK(one.certificates[i].tau == four.certificates[i].tau);
        CHECK(one.certificates[i].pass == four.certificates[i].pass);
        CHECK(one.certificates[i].max_diff == four.certificates[i].max_diff);
        CHECK(one.certificates[i].min_target == four.certificates[i].min_target);
    }
    CHECK(one.hit_fraction == four.hit_fraction);
}

TEST_CASE("align_search") {
    // tau = 0 always qualifies
    auto hits0 = align_search({1.7, 2.9}, 1, 0.05, 0.0, 1.0, 0.5);
    REQUIRE(!hits0.empty());
    CHECK(hits0[0] == 0.0);

    // single frequency: hits sit near multiples of 2 pi
    auto hits1 = align_search({1.0}, 1, 0.1, 0.1, 50.0, 0.01);
    REQUIRE(!hits1.empty());
    for (double tau : hits1) {
        double nearest = std::round(tau / kTwoPi) * kTwoPi;
        CHECK(std::abs(tau - nearest) < 0.1 * kTwoPi + 1e-9);
    }

    // two log frequencies: simultaneous alignment exists below 10^4
    auto hits2 = align_search({std::log(2.0), std::log(3.0)}, 1, 0.05, 0.01, 10000.0, 0.01);
    CHECK(!hits2.empty());

    CHECK_THROWS(align_search({}, 1, 0.05, 0.0, 1.0, 0.5));
    CHECK_THROWS(align_search({1.0}, 1, 0.6, 0.0, 1.0, 0.5));
}
