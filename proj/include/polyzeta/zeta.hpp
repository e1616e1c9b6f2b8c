#pragma once

#include <cstdint>
#include <vector>

#include "polyzeta/types.hpp"

namespace polyzeta {

// Euler-Maclaurin evaluation of zeta and its derivatives on the desk-scale
// region (sigma >= -3 or so, |t| <= ~2100). Defaults meet |error| < 1e-10 for
// 0.4 <= sigma <= 4, |t| <= 2000.
struct ZetaParams {
    int truncation_N = 0;     // 0 = auto: max(10, ceil(|t|/2) + 10)
    int bernoulli_terms = 12; // Euler-Maclaurin correction depth, <= 30
};

// zeta^{(k)}(s) for k = 0..max_k, in one pass.
std::vector<Cx> zeta_jet(Cx s, int max_k, const ZetaParams& params = {});

Cx zeta(Cx s, const ZetaParams& params = {});
Cx zeta_derivative(Cx s, int k, const ZetaParams& params = {});

// 1/zeta by division; throws NearZeroOfZeta when |zeta(s)| <= 1e-12.
Cx zeta_reciprocal(Cx s, const ZetaParams& params = {});

// Handles for the contour/counting machinery. zeta^{(k)} has a pole of order
// k+1 at s = 1.
AnalyticFunction make_zeta_function(const ZetaParams& params = {});
AnalyticFunction make_zeta_derivative_function(int k, const ZetaParams& params = {});

// Moebius function mu(1..n_max) via smallest-prime-factor sieve.
class MoebiusTable {
public:
    explicit MoebiusTable(int n_max);
    int n_max() const { return static_cast<int>(values_.size()) - 1; }
    int mu(int n) const;
    const std::vector<std::int8_t>& values() const { return values_; }

private:
    std::vector<std::int8_t> values_;  // values_[n] = mu(n), values_[0] unused
};

}  // namespace polyzeta
