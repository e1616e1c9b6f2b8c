#pragma once

#include <stdexcept>
#include <string>

namespace polyzeta {

// Base for all numerical failures (exit code 3 at the CLI).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Base for resource/cap violations (exit code 4 at the CLI).
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// core_analytic
struct BoundaryZero : NumericError { using NumericError::NumericError; };
struct NonConvergence : NumericError { using NumericError::NumericError; };
struct PoleInDisk : NumericError { using NumericError::NumericError; };
struct InvalidRadii : NumericError { using NumericError::NumericError; };
struct EvaluationAtPole : NumericError { using NumericError::NumericError; };
struct ClusterUnresolved : NumericError { using NumericError::NumericError; };

// zeta_engine
struct PoleAtOne : NumericError { using NumericError::NumericError; };
struct NearZeroOfZeta : NumericError { using NumericError::NumericError; };

// dirichlet_ring
struct GrowthViolation : NumericError { using NumericError::NumericError; };
struct BudgetExceeded : BudgetError { using BudgetError::BudgetError; };

// poly_composer
struct DegreeCapExceeded : BudgetError { using BudgetError::BudgetError; };
struct TermBudgetExceeded : BudgetError { using BudgetError::BudgetError; };

// rouche_localizer
struct ZeroLeadingJet : NumericError { using NumericError::NumericError; };
struct NoNonzeroRoot : NumericError { using NumericError::NumericError; };
struct DegenerateAtAlpha : NumericError { using NumericError::NumericError; };
struct ZeroAlpha : NumericError { using NumericError::NumericError; };
struct TargetVanishesOnCircle : NumericError { using NumericError::NumericError; };

// counting_suite
struct IncompleteZeroSet : NumericError { using NumericError::NumericError; };
struct HypothesisViolation : NumericError { using NumericError::NumericError; };

// gallery
struct UnknownEntry : std::runtime_error { using std::runtime_error::runtime_error; };
struct ParamOutOfRange : std::runtime_error { using std::runtime_error::runtime_error; };

// cli / expression parser
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

}  // namespace polyzeta
