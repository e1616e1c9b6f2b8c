#include "polyzeta/dirichlet_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polyzeta {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPruneEps = 1e-300;
constexpr std::size_t kMulBudget = 10'000'000;

struct ZeroTail final : TailModel {
    double bound(double) const override { return 0.0; }
};

struct GeometricTail final : TailModel {
    double A, Lambda, lambda_last;
    GeometricTail(double a, double l, double ll) : A(a), Lambda(l), lambda_last(ll) {}
    double bound(double sigma) const override {
        if (!(sigma > 0.5)) return kInf;
        return A * std::exp(-(Lambda - lambda_last) * (sigma - 0.5) - lambda_last * sigma);
    }
};

struct IntegralTail final : TailModel {
    double C, theta, N;
    IntegralTail(double c, double th, double n) : C(c), theta(th), N(n) {}
    double bound(double sigma) const override {
        if (!(sigma > 0.5)) return kInf;
        if (!(sigma > theta + 1.0)) return kInf;
        return C * std::pow(N, theta + 1.0 - sigma) / (sigma - theta - 1.0);
    }
};

// make_ordinary certificate: the integral-test bound where it holds, and the
// declared-membership geometric form C N^{theta+1} log N * N^{-sigma}
// elsewhere in sigma > 1/2 (the ring's definition is caller-declared; the
// geometric form dominates the integral bound once sigma >= theta+1+1/log N).
struct OrdinaryTail final : TailModel {
    double C, theta, N;
    OrdinaryTail(double c, double th, double n) : C(c), theta(th), N(n) {}
    double bound(double sigma) const override {
        if (!(sigma > 0.5)) return kInf;
        double geo = C * std::pow(N, theta + 1.0 - sigma) * std::log(std::max(N, 2.0));
        if (sigma > theta + 1.0) {
            double integral = C * std::pow(N, theta + 1.0 - sigma) / (sigma - theta - 1.0);
            return std::min(integral, geo);
        }
        return geo;
    }
};

struct SumTail final : TailModel {
    TailPtr p, q;
    SumTail(TailPtr a, TailPtr b) : p(std::move(a)), q(std::move(b)) {}
    double bound(double sigma) const override { return p->bound(sigma) + q->bound(sigma); }
    bool heuristic() const override { return p->heuristic() || q->heuristic(); }
};

struct ScaledTail final : TailModel {
    TailPtr base;
    double factor;
    bool flag;
    ScaledTail(TailPtr b, double f, bool heur) : base(std::move(b)), factor(f), flag(heur) {}
    double bound(double sigma) const override { return factor * base->bound(sigma); }
    bool heuristic() const override { return flag || base->heuristic(); }
};

// Product tail: T_AB <= S_A T_B + T_A S_B + T_A T_B, with S the stored
// absolute mass at sigma (term snapshots are shared, immutable).
struct ProductTail final : TailModel {
    TailPtr ta, tb;
    std::shared_ptr<const std::vector<SeriesTerm>> sa, sb;
    ProductTail(TailPtr a, TailPtr b, std::shared_ptr<const std::vector<SeriesTerm>> xs,
                std::shared_ptr<const std::vector<SeriesTerm>> ys)
        : ta(std::move(a)), tb(std::move(b)), sa(std::move(xs)), sb(std::move(ys)) {}
    static double mass(const std::vector<SeriesTerm>& terms, double sigma) {
        double m = 0.0;
        for (const auto& t : terms) m += std::abs(t.a) * std::exp(-t.lambda * sigma);
        return m;
    }
    double bound(double sigma) const override {
        double Ta = ta->bound(sigma), Tb = tb->bound(sigma);
        if (Ta == 0.0 && Tb == 0.0) return 0.0;
        return mass(*sa, sigma) * Tb + Ta * mass(*sb, sigma) + Ta * Tb;
    }
    bool heuristic() const override { return ta->heuristic() || tb->heuristic(); }
};

bool lambda_close(double x, double y) {
    return std::abs(x - y) <= 1e-12 * std::max(1.0, std::max(std::abs(x), std::abs(y)));
}

// Sort, merge duplicate exponents, prune zero coefficients.
std::vector<SeriesTerm> normalize(std::vector<SeriesTerm> terms) {
    for (const auto& t : terms) {
        if (!std::isfinite(t.lambda) || !std::isfinite(t.a.real()) || !std::isfinite(t.a.imag()))
            throw std::invalid_argument("GeneralDirichletSeries: non-finite term");
    }
    std::sort(terms.begin(), terms.end(),
              [](const SeriesTerm& x, const SeriesTerm& y) { return x.lambda < y.lambda; });
    std::vector<SeriesTerm> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        if (!out.empty() && lambda_close(out.back().lambda, t.lambda)) {
            out.back().a += t.a;
        } else {
            out.push_back(t);
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const SeriesTerm& t) { return std::abs(t.a) < kPruneEps; }),
              out.end());
    return out;
}

}  // namespace

TailPtr tail_zero() {
    static const TailPtr z = std::make_shared<ZeroTail>();
    return z;
}

TailPtr tail_geometric(double A, double Lambda, double lambda_last) {
    if (A < 0.0) throw std::invalid_argument("tail_geometric: A >= 0 required");
    if (A == 0.0) return tail_zero();
    return std::make_shared<GeometricTail>(A, Lambda, lambda_last);
}

TailPtr tail_integral(double C, double theta, double N) {
    if (C < 0.0 || !(N >= 1.0)) throw std::invalid_argument("tail_integral: bad parameters");
    if (C == 0.0) return tail_zero();
    return std::make_shared<IntegralTail>(C, theta, N);
}

GeneralDirichletSeries::GeneralDirichletSeries()
    : terms_(std::make_shared<const std::vector<SeriesTerm>>()), tail_(tail_zero()) {}

GeneralDirichletSeries GeneralDirichletSeries::from_terms(std::vector<SeriesTerm> terms,
                                                          TailPtr tail) {
    auto t = std::make_shared<const std::vector<SeriesTerm>>(normalize(std::move(terms)));
    return GeneralDirichletSeries(std::move(t), tail ? std::move(tail) : tail_zero());
}

GeneralDirichletSeries GeneralDirichletSeries::single(Cx a, double lambda) {
    return from_terms({{a, lambda}});
}

GeneralDirichletSeries GeneralDirichletSeries::constant(Cx value) {
    return from_terms({{value, 0.0}});
}

GeneralDirichletSeries GeneralDirichletSeries::make_ordinary(const std::vector<Cx>& coeffs,
                                                             double shift, double growth_C,
                                                             double growth_theta) {
    std::vector<SeriesTerm> terms;
    terms.reserve(coeffs.size());
    double maxabs = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        double n = static_cast<double>(i + 1);
        maxabs = std::max(maxabs, std::abs(coeffs[i]));
        terms.push_back({coeffs[i] * std::pow(n, -shift), std::log(n)});
    }
    double C = growth_C;
    if (C < 0.0) {
        C = maxabs;  // default declaration: |c_n| <= max |c|
    } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            double n = static_cast<double>(i + 1);
            if (std::abs(coeffs[i]) > C * std::pow(n, growth_theta) * (1.0 + 1e-12))
                throw GrowthViolation("make_ordinary: coefficient exceeds declared growth");
        }
    }
    double N = static_cast<double>(std::max<std::size_t>(coeffs.size(), 1));
    TailPtr tail = C == 0.0 ? tail_zero()
                            : TailPtr(std::make_shared<OrdinaryTail>(C, growth_theta - shift, N));
    return from_terms(std::move(terms), std::move(tail));
}

double GeneralDirichletSeries::lambda_last() const {
    if (terms_->empty()) return 0.0;
    return terms_->back().lambda;
}

GeneralDirichletSeries GeneralDirichletSeries::scaled(Cx factor) const {
    if (factor == Cx(0.0, 0.0)) return GeneralDirichletSeries();
    std::vector<SeriesTerm> t = *terms_;
    for (auto& x : t) x.a *= factor;
    TailPtr tail = std::abs(factor) <= 1.0
                       ? tail_
                       : TailPtr(std::make_shared<ScaledTail>(tail_, std::abs(factor), false));
    return from_terms(std::move(t), std::move(tail));
}

GeneralDirichletSeries GeneralDirichletSeries::phase_rotated(double tau) const {
    std::vector<SeriesTerm> t = *terms_;
    for (auto& x : t) x.a *= std::exp(Cx(0.0, -x.lambda * tau));
    return from_terms(std::move(t), tail_);
}

GeneralDirichletSeries ring_add(const GeneralDirichletSeries& A, const GeneralDirichletSeries& B) {
    std::vector<SeriesTerm> t = *A.terms_;
    t.insert(t.end(), B.terms_->begin(), B.terms_->end());
    TailPtr tail;
    if (A.tail_->bound(1.0) == 0.0 && B.tail_->bound(1.0) == 0.0 &&
        A.tail_->bound(0.51) == 0.0 && B.tail_->bound(0.51) == 0.0) {
        tail = tail_zero();
    } else {
        tail = std::make_shared<SumTail>(A.tail_, B.tail_);
    }
    return GeneralDirichletSeries::from_terms(std::move(t), std::move(tail));
}

GeneralDirichletSeries ring_mul(const GeneralDirichletSeries& A, const GeneralDirichletSeries& B) {
    if (A.terms_->size() * B.terms_->size() > kMulBudget)
        throw BudgetExceeded("ring_mul: term-count product exceeds budget");
    std::vector<SeriesTerm> t;
    t.reserve(A.terms_->size() * B.terms_->size());
    for (const auto& x : *A.terms_)
        for (const auto& y : *B.terms_) t.push_back({x.a * y.a, x.lambda + y.lambda});
    TailPtr tail;
    bool a_exact = A.tail_->bound(0.51) == 0.0;
    bool b_exact = B.tail_->bound(0.51) == 0.0;
    if (a_exact && b_exact) {
        tail = tail_zero();
    } else {
        tail = std::make_shared<ProductTail>(A.tail_, B.tail_, A.terms_, B.terms_);
    }
    return GeneralDirichletSeries::from_terms(std::move(t), std::move(tail));
}

GeneralDirichletSeries ds_derivative(const GeneralDirichletSeries& A, int k) {
    if (k < 1) throw std::invalid_argument("ds_derivative: k >= 1 required");
    std::vector<SeriesTerm> t = *A.terms_;
    for (auto& x : t) {
        Cx f = std::pow(Cx(-x.lambda, 0.0), k);
        x.a *= f;
    }
    double factor = std::pow(std::max(1.0, std::abs(A.lambda_last())), k);
    TailPtr tail = A.tail_->bound(0.51) == 0.0
                       ? tail_zero()
                       : TailPtr(std::make_shared<ScaledTail>(A.tail_, factor, true));
    return GeneralDirichletSeries::from_terms(std::move(t), std::move(tail));
}

EvalResult ds_eval(const GeneralDirichletSeries& A, Cx s) {
    // Kahan-compensated accumulation.
    double re = 0.0, rec = 0.0, im = 0.0, imc = 0.0;
    for (const auto& t : A.terms()) {
        Cx v = t.a * std::exp(-t.lambda * s);
        double tx = v.real() - rec, sx = re + tx;
        rec = (sx - re) - tx;
        re = sx;
        double ty = v.imag() - imc, sy = im + ty;
        imc = (sy - im) - ty;
        im = sy;
    }
    return {Cx(re, im), A.tail_bound(s.real())};
}

MeanSquarePrediction mean_square_predicted(const GeneralDirichletSeries& A, double sigma) {
    if (!(sigma > 0.5))
        throw std::invalid_argument("mean_square_predicted: sigma > 1/2 required");
    double acc = 0.0;
    for (const auto& t : A.terms()) acc += std::norm(t.a) * std::exp(-2.0 * t.lambda * sigma);
    double tb = A.tail_bound(sigma);
    return {acc, tb * tb};
}

}  // namespace polyzeta
