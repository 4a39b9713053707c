#pragma once

#include <stdexcept>
#include <string>

namespace polya {

/// Parameter tuple violates a precondition (bad pFq parameters, bad CLI input).
struct InvalidParamsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Series inversion / logarithmic derivative requested for f with f(0) = 0.
struct ZeroConstantTermError : std::domain_error {
  ZeroConstantTermError() : std::domain_error("series constant term is zero") {}
};

/// S-fraction expansion requested for a moment sequence with s_0 = 0.
struct ZeroLeadingMomentError : std::domain_error {
  ZeroLeadingMomentError() : std::domain_error("leading moment is zero") {}
};

/// e^{-x} * 1F1(b+m;b;x) failed to truncate to a degree-m polynomial.
/// This can only mean an arithmetic bug, never bad input.
struct ReductionFailureError : std::logic_error {
  using std::logic_error::logic_error;
};

/// An intermediate S-fraction coefficient vanished while the remainder did
/// not, so the sign test is inconclusive at this parameter point.
struct DegeneratePivotError : std::runtime_error {
  int index;
  explicit DegeneratePivotError(int k)
      : std::runtime_error("degenerate pivot: alpha_" + std::to_string(k) +
                           " vanishes with nonzero remainder"),
        index(k) {}
};

/// Bisection endpoints do not bracket a sign change.
struct BadBracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The constant relating the reduced rational function to the reference
/// numerator/denominator normalization could not be fixed.
struct NormalizationAmbiguousError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Binary polynomial operation on operands with different variable tags.
struct VariableMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace polya
