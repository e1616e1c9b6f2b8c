#include "polyzeta/zeta.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace polyzeta {
namespace {

// B_{2k}, k = 1..30, exact rationals rendered to double.
constexpr double kBernoulli2k[30] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
    1520097643918070802691.0 / 1806.0,
    -27833269579301024235023.0 / 690.0,
    596451111593912163277961.0 / 282.0,
    -5609403368997817686249127547.0 / 46410.0,
    495057205241079648212477525.0 / 66.0,
    -801165718135489957347924991853.0 / 1590.0,
    29149963634884862421418123812691.0 / 798.0,
    -2479392929313226753685415739663229.0 / 870.0,
    84483613348880041862046775994036021.0 / 354.0,
    -1215233140483755572040304994079820246041491.0 / 56786730.0,
};

// Kahan-compensated accumulator for one complex Taylor coefficient, with the
// scalar type chosen by the caller (long double restores the digits that term
// rounding costs high-order jets at large |t|).
template <typename Real>
struct CompensatedCx {
    Real re = 0, re_c = 0, im = 0, im_c = 0;
    void add(Real x, Real y) {
        Real tx = x - re_c;
        Real sx = re + tx;
        re_c = (sx - re) - tx;
        re = sx;
        Real ty = y - im_c;
        Real sy = im + ty;
        im_c = (sy - im) - ty;
        im = sy;
    }
    Cx value() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

// Head sum: sum_{n=1}^{N-1} n^{-s}, Taylor coefficients about s up to order K,
// coefficient j of n^{-s-eps} being n^{-s} (-ln n)^j / j!.
template <typename Real>
void head_sum(Cx s, int N, int K, std::vector<Cx>& taylor) {
    std::vector<CompensatedCx<Real>> acc(K + 1);
    const Real sigma = static_cast<Real>(s.real());
    const Real t = static_cast<Real>(s.imag());
    std::vector<Real> invfac(K + 1, 1);
    for (int j = 1; j <= K; ++j) invfac[j] = invfac[j - 1] / static_cast<Real>(j);
    acc[0].add(1, 0);  // n = 1 contributes only to order 0
    for (int n = 2; n < N; ++n) {
        Real ln;
        if constexpr (std::is_same_v<Real, long double>) ln = logl(static_cast<long double>(n));
        else ln = std::log(static_cast<double>(n));
        Real mag;
        if constexpr (std::is_same_v<Real, long double>) mag = expl(-sigma * ln);
        else mag = std::exp(static_cast<double>(-sigma * ln));
        Real phase = -t * ln;
        Real cp, sp;
        if constexpr (std::is_same_v<Real, long double>) { cp = cosl(phase); sp = sinl(phase); }
        else { cp = std::cos(static_cast<double>(phase)); sp = std::sin(static_cast<double>(phase)); }
        Real pre = mag * cp, pim = mag * sp;
        acc[0].add(pre, pim);
        Real powr = 1;
        for (int j = 1; j <= K; ++j) {
            powr *= -ln;
            acc[j].add(pre * powr * invfac[j], pim * powr * invfac[j]);
        }
    }
    for (int j = 0; j <= K; ++j) taylor[j] += acc[j].value();
}

}  // namespace

std::vector<Cx> zeta_jet(Cx s, int max_k, const ZetaParams& params) {
    if (std::abs(s - Cx(1.0, 0.0)) < 1e-14)
        throw PoleAtOne("zeta: pole at s = 1");
    if (max_k < 0) throw std::invalid_argument("zeta_jet: max_k >= 0 required");
    const int K = max_k;
    const int nu = std::min(std::max(params.bernoulli_terms, 1), 30);
    const int N = params.truncation_N > 0
                      ? std::max(params.truncation_N, 2)
                      : std::max(10, static_cast<int>(std::ceil(std::abs(s.imag()) / 2.0)) + 10);

    std::vector<Cx> T(K + 1, Cx(0.0, 0.0));
    if (K >= 3) head_sum<long double>(s, N, K, T);
    else head_sum<double>(s, N, K, T);

    const double lnN = std::log(static_cast<double>(N));
    std::vector<double> invfac(K + 1, 1.0);
    for (int j = 1; j <= K; ++j) invfac[j] = invfac[j - 1] / j;

    // N^{1-s}/(s-1): convolve A_j = N^{1-s} (-lnN)^j / j! with B_j = (-1)^j (s-1)^{-j-1}.
    {
        Cx NA = std::exp((Cx(1.0, 0.0) - s) * lnN);
        std::vector<Cx> A(K + 1), B(K + 1);
        double p = 1.0;
        Cx inv = Cx(1.0, 0.0) / (s - 1.0);
        Cx q = inv;
        for (int j = 0; j <= K; ++j) {
            A[j] = NA * p * invfac[j];
            B[j] = (j % 2 == 0 ? q : -q);
            p *= -lnN;
            q *= inv;
        }
        for (int j = 0; j <= K; ++j)
            for (int a = 0; a <= j; ++a) T[j] += A[a] * B[j - a];
    }

    // + N^{-s}/2
    {
        Cx NmS = std::exp(-s * lnN);
        double p = 1.0;
        for (int j = 0; j <= K; ++j) {
            T[j] += 0.5 * NmS * p * invfac[j];
            p *= -lnN;
        }
    }

    // Euler-Maclaurin corrections: sum_k B_{2k}/(2k)! P_k(u) N^{-u-(2k-1)},
    // with P_k(u) = prod_{m=0}^{2k-2} (u+m), evaluated as jets u = s + eps.
    {
        std::vector<Cx> P(K + 1, Cx(0.0, 0.0));
        P[0] = Cx(1.0, 0.0);
        int m_done = 0;
        double fact = 1.0;  // (2k)!
        for (int k = 1; k <= nu; ++k) {
            for (int m = m_done; m <= 2 * k - 2; ++m) {
                for (int j = K; j >= 0; --j) {
                    P[j] = P[j] * (s + static_cast<double>(m));
                    if (j > 0) P[j] += P[j - 1];
                }
            }
            m_done = 2 * k - 1;
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            const double coef = kBernoulli2k[k - 1] / fact;
            Cx E0 = std::exp(-(s + static_cast<double>(2 * k - 1)) * lnN);
            std::vector<Cx> E(K + 1);
            double p = 1.0;
            for (int j = 0; j <= K; ++j) {
                E[j] = E0 * p * invfac[j];
                p *= -lnN;
            }
            for (int j = 0; j <= K; ++j) {
                Cx conv(0.0, 0.0);
                for (int a = 0; a <= j; ++a) conv += P[a] * E[j - a];
                T[j] += coef * conv;
            }
        }
    }

    // Taylor coefficients -> derivatives.
    std::vector<Cx> out(K + 1);
    double fj = 1.0;
    for (int j = 0; j <= K; ++j) {
        if (j > 0) fj *= j;
        out[j] = T[j] * fj;
    }
    return out;
}

Cx zeta(Cx s, const ZetaParams& params) { return zeta_jet(s, 0, params)[0]; }

Cx zeta_derivative(Cx s, int k, const ZetaParams& params) {
    if (k < 1) throw std::invalid_argument("zeta_derivative: k >= 1 required");
    return zeta_jet(s, k, params)[k];
}

Cx zeta_reciprocal(Cx s, const ZetaParams& params) {
    Cx z = zeta(s, params);
    if (std::abs(z) <= 1e-12)
        throw NearZeroOfZeta("zeta_reciprocal: |zeta(s)| <= 1e-12");
    return Cx(1.0, 0.0) / z;
}

AnalyticFunction make_zeta_function(const ZetaParams& params) {
    AnalyticFunction f;
    f.name = "zeta";
    f.eval = [params](Cx s) { return zeta(s, params); };
    f.jet = [params](Cx s, int k) { return zeta_jet(s, k, params); };
    f.max_derivative_order = 32;
    f.poles = {{Cx(1.0, 0.0), 1}};
    f.domain = ComplexRect(-23.0, 100.0, -2100.0, 2100.0);
    return f;
}

AnalyticFunction make_zeta_derivative_function(int k, const ZetaParams& params) {
    if (k < 0) throw std::invalid_argument("make_zeta_derivative_function: k >= 0");
    if (k == 0) return make_zeta_function(params);
    AnalyticFunction f;
    f.name = "zeta_derivative_" + std::to_string(k);
    f.eval = [params, k](Cx s) { return zeta_jet(s, k, params)[k]; };
    f.jet = [params, k](Cx s, int j) {
        auto full = zeta_jet(s, k + j, params);
        return std::vector<Cx>(full.begin() + k, full.end());
    };
    f.max_derivative_order = 32;
    f.poles = {{Cx(1.0, 0.0), k + 1}};
    f.domain = ComplexRect(-23.0, 100.0, -2100.0, 2100.0);
    return f;
}

MoebiusTable::MoebiusTable(int n_max) {
    if (n_max < 1) throw std::invalid_argument("MoebiusTable: n_max >= 1");
    values_.assign(static_cast<std::size_t>(n_max) + 1, 0);
    std::vector<int> spf(n_max + 1, 0);  // smallest prime factor
    std::vector<int> primes;
    values_[1] = 1;
    for (int n = 2; n <= n_max; ++n) {
        if (spf[n] == 0) {
            spf[n] = n;
            primes.push_back(n);
            values_[n] = -1;
        }
        for (int p : primes) {
            long long m = 1LL * p * n;
            if (p > spf[n] || m > n_max) break;
            spf[m] = p;
            values_[m] = (p == spf[n]) ? 0 : -values_[n];
        }
    }
}

int MoebiusTable::mu(int n) const {
    if (n < 1 || n > n_max()) throw std::out_of_range("MoebiusTable::mu: n out of range");
    return values_[n];
}

}  // namespace polyzeta
