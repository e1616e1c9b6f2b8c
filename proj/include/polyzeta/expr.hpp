#pragma once

#include <string>

#include "polyzeta/dirichlet_poly.hpp"
#include "polyzeta/zeta.hpp"

namespace polyzeta {

// Surface syntax for polynomial compositions over zeta:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' UINT)?
//   atom   := 'D' UINT | 'zeta' | 'i' | NUMBER | NUMBER 'i'
//           | 'series' '{' <series JSON> '}' | '(' expr ')'
// D0 is the base function, Dk its k-th derivative; 'zeta' is an alias for D0.
DirichletPolynomial parse_polynomial(const std::string& text);

// Polynomial with the base bound to zeta.
ComposedFunction parse_expression(const std::string& text, double tau = 0.0,
                                  const ZetaParams& params = {});

// Canonical printable form; parse_polynomial(print_polynomial(P)) is
// structurally identical to P.
std::string print_polynomial(const DirichletPolynomial& P);

}  // namespace polyzeta
