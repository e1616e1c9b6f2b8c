#include <doctest.h>

#include <cmath>
#include <random>

#include "polyzeta/contour.hpp"
#include "polyzeta/zeta.hpp"
#include "support/oracles.hpp"

using namespace polyzeta;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("zeta at reference points") {
    CHECK(std::abs(zeta(Cx(2.0, 0.0)) - kPi * kPi / 6.0) < 1e-12);
    CHECK(std::abs(zeta(Cx(0.0, 0.0)) - Cx(-0.5, 0.0)) < 1e-12);
    CHECK(std::abs(zeta(Cx(-1.0, 0.0)) - Cx(-1.0 / 12.0, 0.0)) < 1e-12);
    Cx s(0.75, 10.0);
    CHECK(std::abs(zeta(s) - oracles::zeta_via_eta(s)) < 1e-10);
}

TEST_CASE("zeta throws at the pole") {
    CHECK_THROWS_AS(zeta(Cx(1.0, 0.0)), PoleAtOne);
    CHECK_THROWS_AS(zeta(Cx(1.0 + 1e-15, 0.0)), PoleAtOne);
}

TEST_CASE("zeta agrees with the eta oracle at random points") {
    std::mt19937 rng(20260809);
    std::uniform_real_distribution<double> sig(0.4, 4.0), tt(-2000.0, 2000.0);
    for (int i = 0; i < 50; ++i) {
        Cx s;
        do {
            s = Cx(sig(rng), tt(rng));
        } while (oracles::eta_denominator(s) < 0.1);
        CHECK(std::abs(zeta(s) - oracles::zeta_via_eta(s)) < 1e-10);
    }
}

TEST_CASE("zeta derivatives against the eta-jet oracle") {
    CHECK(std::abs(zeta_derivative(Cx(2.0, 0.0), 1) - Cx(-0.9375482543, 0.0)) < 1e-9);
    for (int k = 1; k <= 6; ++k) {
        Cx want = oracles::zeta_derivative_direct(2.0, k);
        CHECK(std::abs(zeta_derivative(Cx(2.0, 0.0), k) - want) < 1e-10);
    }
    // odd derivatives are real negative for real sigma > 1
    for (double sigma : {1.5, 2.0, 3.0}) {
        for (int k : {1, 3, 5}) {
            Cx v = zeta_derivative(Cx(sigma, 0.0), k);
            CHECK(v.real() < 0.0);
            CHECK(std::abs(v.imag()) < 1e-12);
        }
    }
}

TEST_CASE("zeta vanishes at the first critical-line ordinate") {
    CHECK(std::abs(zeta(Cx(0.5, 14.134725141734693))) < 1e-6);
}

TEST_CASE("zeta_derivative matches cauchy_derivative") {
    AnalyticFunction f = make_zeta_function();
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> sig(0.4, 4.0), tt(-50.0, 50.0);
    for (int i = 0; i < 25; ++i) {
        Cx s(sig(rng), tt(rng));
        if (std::abs(s - Cx(1.0, 0.0)) < 0.3) continue;
        for (int k = 1; k <= 4; ++k) {
            Cx a = zeta_derivative(s, k);
            Cx b = cauchy_derivative(f, s, k);
            CHECK(std::abs(a - b) < 1e-8);
        }
    }
}

TEST_CASE("pole residue along eight approach directions") {
    for (int d = 0; d < 8; ++d) {
        double th = 2.0 * kPi * d / 8.0;
        Cx s = Cx(1.0, 0.0) + 1e-4 * Cx(std::cos(th), std::sin(th));
        Cx v = (s - Cx(1.0, 0.0)) * zeta(s);
        CHECK(std::abs(v - Cx(1.0, 0.0)) < 1e-3);
    }
}

TEST_CASE("reciprocal identity and guard") {
    CHECK(std::abs(zeta_reciprocal(Cx(2.0, 0.0)) - Cx(6.0 / (kPi * kPi), 0.0)) < 1e-12);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> sig(0.55, 4.0), tt(-100.0, 100.0);
    for (int i = 0; i < 20; ++i) {
        Cx s(sig(rng), tt(rng));
        if (std::abs(s - Cx(1.0, 0.0)) < 0.1) continue;
        CHECK(std::abs(zeta(s) * zeta_reciprocal(s) - Cx(1.0, 0.0)) < 1e-12);
    }
    CHECK_THROWS_AS(zeta_reciprocal(Cx(0.5, 14.134725141734693)), NearZeroOfZeta);
}

TEST_CASE("zeta(3) matches the oracle") {
    CHECK(std::abs(zeta(Cx(3.0, 0.0)) - oracles::zeta_via_eta(Cx(3.0, 0.0))) < 1e-12);
    CHECK(std::abs(zeta(Cx(3.0, 0.0)) - Cx(1.2020569031595943, 0.0)) < 1e-12);
}

TEST_CASE("moebius table") {
    MoebiusTable table(10000);
    CHECK(table.mu(1) == 1);
    CHECK(table.mu(2) == -1);
    CHECK(table.mu(4) == 0);
    CHECK(table.mu(6) == 1);
    CHECK(table.mu(30) == -1);
    CHECK(table.mu(9973) == -1);  // prime
    // sum_{d|n} mu(d) = [n == 1], exhaustively via the divisor-sum sieve
    std::vector<int> divsum(10001, 0);
    for (int d = 1; d <= 10000; ++d)
        for (int n = d; n <= 10000; n += d) divsum[n] += table.mu(d);
    CHECK(divsum[1] == 1);
    int bad = 0;
    for (int n = 2; n <= 10000; ++n)
        if (divsum[n] != 0) ++bad;
    CHECK(bad == 0);
}

TEST_CASE("params are honored") {
    ZetaParams big{200, 14};
    CHECK(std::abs(zeta(Cx(2.0, 0.0), big) - kPi * kPi / 6.0) < 1e-13);
}
