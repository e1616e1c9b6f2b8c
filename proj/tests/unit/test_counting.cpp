#include <doctest.h>

#include <cmath>

#include "polyzeta/counting.hpp"
#include "polyzeta/expr.hpp"
#include "polyzeta/quadrature.hpp"
#include "polyzeta/zeta.hpp"
#include "support/oracles.hpp"

using namespace polyzeta;

TEST_CASE("berndt main term") {
    CHECK(std::abs(berndt_main_term(200.0) - 56.25) < 0.01);
    // increasing on desk heights
    double prev = berndt_main_term(50.0);
    for (double T = 60.0; T <= 2000.0; T += 10.0) {
        double cur = berndt_main_term(T);
        CHECK(cur > prev);
        prev = cur;
    }
    // superlinear: doubling more than doubles for T >= 100
    for (double T : {100.0, 250.0, 700.0}) {
        CHECK(berndt_main_term(2.0 * T) > 2.0 * berndt_main_term(T));
    }
}

TEST_CASE("logarithmic integral quadrature") {
    double li4 = logarithmic_integral(4.0);
    double simpson = oracles::adaptive_simpson([](double y) { return 1.0 / std::log(y); }, 2.0, 4.0);
    CHECK(std::abs(li4 - simpson) < 1e-6);
    CHECK(li4 == doctest::Approx(1.9224).epsilon(1e-3));
}

TEST_CASE("lm_weighted_sum on an empty zero set") {
    ZeroReport empty;
    empty.region = ComplexRect(-1.0, 4.0, 0.0, 30.0);
    empty.count = 0;
    LmSum s = lm_weighted_sum(1, 20.0, empty);
    CHECK(s.empirical == 0.0);
    CHECK(s.zeros_used == 0);
}

TEST_CASE("lm_weighted_sum rejects unresolved clusters") {
    ZeroReport rep;
    rep.region = ComplexRect(-1.0, 4.0, 0.0, 30.0);
    rep.unresolved_clusters = 1;
    CHECK_THROWS_AS(lm_weighted_sum(1, 20.0, rep), IncompleteZeroSet);
}

TEST_CASE("mean square of the unit constant is exactly 1") {
    AnalyticFunction one;
    one.name = "one";
    one.eval = [](Cx) { return Cx(1.0, 0.0); };
    one.domain = ComplexRect(-10.0, 10.0, -1.0, 5000.0);
    for (double T : {10.0, 133.7, 400.0}) {
        MeanValueResult r = mean_square_integral(one, 0.75, T);
        CHECK(std::abs(r.integral_over_T - Cx(1.0, 0.0)) < 1e-12);
    }
}

TEST_CASE("mean square converges toward the series prediction") {
    std::vector<Cx> ones(2000, Cx(1.0, 0.0));
    GeneralDirichletSeries pz = GeneralDirichletSeries::make_ordinary(ones, 0.0, 1.0, 0.0);
    AnalyticFunction f = make_zeta_function();
    double prev_err = 1e9;
    int improvements = 0;
    for (double T : {250.0, 500.0, 1000.0, 2000.0}) {
        MeanValueResult r = mean_square_integral(f, 0.75, T, &pz, 4);
        if (r.rel_error < prev_err) ++improvements;
        prev_err = r.rel_error;
    }
    CHECK(improvements >= 3);
}

TEST_CASE("ingham precondition violations") {
    CHECK_THROWS_AS(ingham_integral(0, 0, 0.3, 0.3, 100.0), HypothesisViolation);
    CHECK_THROWS_AS(ingham_integral(0, 0, -0.6, 2.0, 100.0), HypothesisViolation);
}

TEST_CASE("ingham integral at small T tracks the prediction loosely") {
    MeanValueResult r = ingham_integral(0, 0, 1.2, 1.2, 200.0, 4);
    REQUIRE(r.predicted.has_value());
    CHECK(std::abs(*r.predicted - zeta(Cx(2.4, 0.0))) < 1e-10);
    CHECK(r.rel_error < 0.2);
}

TEST_CASE("density sweep is deterministic across worker counts") {
    ComposedFunction F = parse_expression("D0");
    AnalyticFunction f = as_analytic(F);
    f.name = "zeta_composed";
    std::vector<double> Ts = {20.0, 40.0, 60.0};
    DensitySweep one = density_sweep(f, 0.1, 0.9, Ts, 1);
    DensitySweep eight = density_sweep(f, 0.1, 0.9, Ts, 8);
    REQUIRE(one.counts.size() == eight.counts.size());
    for (std::size_t i = 0; i < one.counts.size(); ++i) CHECK(one.counts[i] == eight.counts[i]);
    CHECK(one.fit.slope == eight.fit.slope);
    // zeta zero ordinates below 60: 14.13, 21.02, 25.01, 30.42, 32.94, 37.59,
    // 40.92, 43.33, 48.01, 49.77, 52.97, 56.45, 59.35
    CHECK(one.counts[0] == 1);
    CHECK(one.counts[1] == 6);
    CHECK(one.counts[2] == 13);
}

TEST_CASE("zeta' counts track the main term once T >= 100") {
    // corridor check over the wide rectangle that covers all complex zeros
    AnalyticFunction z1 = make_zeta_derivative_function(1);
    for (double T : {100.0, 200.0}) {
        long long n = count_zeros_rect(z1, ComplexRect(-1.0, 4.0, 0.0, T)).count;
        double main_term = berndt_main_term(T);
        CHECK(n >= 0.5 * main_term);
        CHECK(n <= 2.0 * main_term);
    }
}

TEST_CASE("zeta itself is zero-free in the open strip") {
    ComposedFunction F = parse_expression("D0");
    AnalyticFunction f = as_analytic(F);
    f.name = "zeta";
    DensitySweep s = density_sweep(f, 0.51, 0.99, {50.0, 100.0});
    CHECK(s.counts[0] == 0);
    CHECK(s.counts[1] == 0);
    CHECK(s.fit.slope == 0.0);
}

TEST_CASE("density sweep input validation") {
    AnalyticFunction f = make_zeta_function();
    CHECK_THROWS(density_sweep(f, 0.9, 0.1, {10.0}));
    CHECK_THROWS(density_sweep(f, 0.1, 0.9, {10.0, 5.0}));
}
