#pragma once

#include <map>
#include <vector>

#include "polyzeta/dirichlet_series.hpp"
#include "polyzeta/types.hpp"

namespace polyzeta {

// Caps keeping symbolic differentiation tractable; all catalog examples
// fit well inside.
inline constexpr int kMaxTotalDegree = 8;
inline constexpr int kMaxVariables = 7;  // l <= 6
inline constexpr int kMaxPolyTerms = 512;

enum class PolyClass { monomial_with_derivative, monomial_plain, non_monomial };

// Polynomial in X_0..X_l with GeneralDirichletSeries coefficients; X_j stands
// for the j-th derivative of the base function.
class DirichletPolynomial {
public:
    using Degree = std::vector<int>;
    using TermMap = std::map<Degree, GeneralDirichletSeries>;

    DirichletPolynomial(int num_vars, TermMap terms);

    static DirichletPolynomial variable(int j, int num_vars);
    static DirichletPolynomial constant(const GeneralDirichletSeries& c, int num_vars = 1);

    int num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_variable_used() const;
    int total_degree() const;

    DirichletPolynomial padded(int num_vars) const;  // extend variable count

private:
    int num_vars_;
    TermMap terms_;
};

DirichletPolynomial poly_add(const DirichletPolynomial& P, const DirichletPolynomial& Q);
DirichletPolynomial poly_mul(const DirichletPolynomial& P, const DirichletPolynomial& Q);
DirichletPolynomial poly_scale(const DirichletPolynomial& P, const GeneralDirichletSeries& c);
DirichletPolynomial poly_pow(const DirichletPolynomial& P, int k);

// Rejects the zero polynomial (no class).
PolyClass classify(const DirichletPolynomial& P);

struct ComposedFunction {
    DirichletPolynomial poly;
    AnalyticFunction base;
    double tau = 0.0;
};

// Eq.-(2)-style evaluation at s + i*tau: coefficients and base derivatives are
// all taken at s + i*tau.
Cx eval_composed(const ComposedFunction& F, Cx s);

// Polynomial over X_0..X_{l+k} whose composition equals d^k/ds^k of the
// original composition (chain/product rule applied symbolically; coefficients
// via ds_derivative).
DirichletPolynomial differentiate_composed(const DirichletPolynomial& P, int k);

// Adapter handle for the counting machinery. Declared pole orders are the
// conservative per-term bound sum_j d_j * (base_order + j), maximized over
// terms.
AnalyticFunction as_analytic(const ComposedFunction& F);

}  // namespace polyzeta
