#pragma once

#include <memory>
#include <vector>

#include "polyzeta/types.hpp"

namespace polyzeta {

struct SeriesTerm {
    Cx a;
    double lambda = 0.0;  // term contributes a * e^{-lambda s}
};

// Upper bound on the dropped (or represented-infinite) tail sum
// sum |a_n| e^{-lambda_n sigma}, as a function of sigma. Models compose under
// the ring operations so reported tail bounds stay actual bounds.
class TailModel {
public:
    virtual ~TailModel() = default;
    virtual double bound(double sigma) const = 0;
    virtual bool heuristic() const { return false; }
};

using TailPtr = std::shared_ptr<const TailModel>;

TailPtr tail_zero();
// Spec-surface geometric certificate: bound(sigma) =
//   A * exp(-(Lambda - lambda_last)(sigma - 1/2)) * exp(-lambda_last * sigma).
TailPtr tail_geometric(double A, double Lambda, double lambda_last);
// Integral-test bound for ordinary series truncated at index N with dropped
// coefficients |c_n| <= C n^theta: C N^{theta+1-sigma}/(sigma-theta-1).
TailPtr tail_integral(double C, double theta, double N);

struct EvalResult {
    Cx value;
    double tail_bound = 0.0;
};

struct MeanSquarePrediction {
    double value = 0.0;
    double tail_bound = 0.0;
};

// Truncated general Dirichlet series sum a_n e^{-lambda_n s} with strictly
// increasing exponents and a tail certificate. Value semantics; cheap copies.
class GeneralDirichletSeries {
public:
    GeneralDirichletSeries();  // zero series

    static GeneralDirichletSeries from_terms(std::vector<SeriesTerm> terms,
                                             TailPtr tail = tail_zero());
    static GeneralDirichletSeries single(Cx a, double lambda);
    static GeneralDirichletSeries constant(Cx value);

    // Ordinary series sum_n c_n n^{-(s+shift)}; declared dropped-coefficient
    // growth |c_n| <= growth_C * n^growth_theta is spot-checked against the
    // supplied coefficients (GrowthViolation on mismatch).
    static GeneralDirichletSeries make_ordinary(const std::vector<Cx>& coeffs, double shift,
                                                double growth_C = -1.0,
                                                double growth_theta = 0.0);

    const std::vector<SeriesTerm>& terms() const { return *terms_; }
    std::size_t term_count() const { return terms_->size(); }
    bool is_zero() const { return terms_->empty(); }
    double lambda_last() const;
    double tail_bound(double sigma) const { return tail_->bound(sigma); }
    bool tail_is_heuristic() const { return tail_->heuristic(); }
    TailPtr tail() const { return tail_; }

    GeneralDirichletSeries scaled(Cx factor) const;
    // a_n -> a_n e^{-i lambda_n tau}: the series whose evaluation at s equals
    // this series at s + i tau.
    GeneralDirichletSeries phase_rotated(double tau) const;

private:
    GeneralDirichletSeries(std::shared_ptr<const std::vector<SeriesTerm>> t, TailPtr tail)
        : terms_(std::move(t)), tail_(std::move(tail)) {}
    std::shared_ptr<const std::vector<SeriesTerm>> terms_;
    TailPtr tail_;

    friend GeneralDirichletSeries ring_add(const GeneralDirichletSeries&,
                                           const GeneralDirichletSeries&);
    friend GeneralDirichletSeries ring_mul(const GeneralDirichletSeries&,
                                           const GeneralDirichletSeries&);
    friend GeneralDirichletSeries ds_derivative(const GeneralDirichletSeries&, int);
};

GeneralDirichletSeries ring_add(const GeneralDirichletSeries& A, const GeneralDirichletSeries& B);
GeneralDirichletSeries ring_mul(const GeneralDirichletSeries& A, const GeneralDirichletSeries& B);

// Termwise a_n -> a_n (-lambda_n)^k; tail scaled by max(1, lambda_last)^k and
// flagged heuristic.
GeneralDirichletSeries ds_derivative(const GeneralDirichletSeries& A, int k);

// Truncated sum plus certified tail bound (infinite when no certificate holds
// at Re s).
EvalResult ds_eval(const GeneralDirichletSeries& A, Cx s);

// Carlson/Parseval limit sum |a_n|^2 e^{-2 lambda_n sigma} of (1/T) int |A|^2.
MeanSquarePrediction mean_square_predicted(const GeneralDirichletSeries& A, double sigma);

}  // namespace polyzeta
