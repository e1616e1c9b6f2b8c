#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace polyzeta {

// Truncated Taylor series about a point (coefficients c[j] = f^{(j)}/j!).
// Small fixed-order arithmetic used by the zeta engine's derivative jets, the
// jet-log solver, and exp-polynomial targets.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::size_t order_plus_one)
        : c_(order_plus_one, std::complex<double>(0.0, 0.0)) {}
    explicit PowerSeries(std::vector<std::complex<double>> coeffs) : c_(std::move(coeffs)) {}

    static PowerSeries constant(std::complex<double> v, std::size_t n) {
        PowerSeries p(n);
        if (n > 0) p.c_[0] = v;
        return p;
    }

    std::size_t size() const { return c_.size(); }
    std::complex<double>& operator[](std::size_t i) { return c_[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<std::complex<double>>& coeffs() const { return c_; }

    PowerSeries& operator+=(const PowerSeries& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

    PowerSeries& scale(std::complex<double> v) {
        for (auto& x : c_) x *= v;
        return *this;
    }

    // Truncated Cauchy product, result order = max of operands.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        std::size_t n = std::max(a.size(), b.size());
        PowerSeries r(n);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    // exp of a series (any constant term).
    static PowerSeries exp(const PowerSeries& p) {
        std::size_t n = p.size();
        PowerSeries e(n);
        if (n == 0) return e;
        e.c_[0] = std::exp(p.c_[0]);
        // e' = p' e  =>  n e_n = sum_{k=1..n} k p_k e_{n-k}
        for (std::size_t m = 1; m < n; ++m) {
            std::complex<double> acc(0.0, 0.0);
            for (std::size_t k = 1; k <= m; ++k)
                acc += static_cast<double>(k) * p.c_[k] * e.c_[m - k];
            e.c_[m] = acc / static_cast<double>(m);
        }
        return e;
    }

    // log of a series with nonzero constant term (principal branch at c0).
    static PowerSeries log(const PowerSeries& g) {
        std::size_t n = g.size();
        if (n == 0 || g.c_[0] == std::complex<double>(0.0, 0.0))
            throw std::invalid_argument("PowerSeries::log: zero constant term");
        PowerSeries p(n);
        p.c_[0] = std::log(g.c_[0]);
        // p' = g'/g  =>  m p_m = (m g_m - sum_{k=1..m-1} k p_k g_{m-k}) / g_0
        for (std::size_t m = 1; m < n; ++m) {
            std::complex<double> acc = static_cast<double>(m) * g.c_[m];
            for (std::size_t k = 1; k < m; ++k)
                acc -= static_cast<double>(k) * p.c_[k] * g.c_[m - k];
            p.c_[m] = acc / (static_cast<double>(m) * g.c_[0]);
        }
        return p;
    }

    // Recenter a polynomial-as-series: coefficients about x0 of p(x) given
    // coefficients about 0 (exact binomial shift, same order).
    PowerSeries recentered(std::complex<double> x0) const {
        std::size_t n = size();
        PowerSeries r(n);
        // Horner on (y + x0): process coefficients highest first.
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = n - 1; j > 0; --j)
                r.c_[j] = r.c_[j] * x0 + r.c_[j - 1];
            r.c_[0] = r.c_[0] * x0 + c_[i];
        }
        return r;
    }

private:
    std::vector<std::complex<double>> c_;
};

}  // namespace polyzeta
