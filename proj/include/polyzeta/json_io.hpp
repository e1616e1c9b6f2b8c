#pragma once

#include <string>

#include <json.hpp>

#include "polyzeta/counting.hpp"
#include "polyzeta/dirichlet_poly.hpp"
#include "polyzeta/rouche.hpp"
#include "polyzeta/types.hpp"

namespace polyzeta {

using json = nlohmann::json;

json region_to_json(const Contour& c);

// {"region":{...},"count":N,"zeros":[{"re":..,"im":..,"mult":..,"residual":..}],
//  "boundary_min_modulus":..,"samples_used":..}
json to_json(const ZeroReport& report);

json to_json(const RoucheCertificate& cert);
json to_json(const MeanValueResult& result);
json to_json(const DensitySweep& sweep);

// {"terms":[{"a_re":..,"a_im":..,"lambda":..}],"tail":{"A":..,"Lambda":..}}
// or {"ordinary":{"coeffs":[...],"shift":..}}
json series_to_json(const GeneralDirichletSeries& series);
GeneralDirichletSeries series_from_json(const json& j);

// {"l":2,"terms":[{"deg":[1,0,1],"coeff":<series JSON>}]}
json polynomial_to_json(const DirichletPolynomial& poly);
DirichletPolynomial polynomial_from_json(const json& j);

}  // namespace polyzeta
