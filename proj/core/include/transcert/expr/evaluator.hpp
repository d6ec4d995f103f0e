#pragma once

#include <optional>
#include <string_view>

#include "transcert/cinterval.hpp"
#include "transcert/expr/ast.hpp"
#include "transcert/verdict.hpp"

namespace transcert::expr {

/// Encloses the value of a (non-comparison) expression.
///
/// Intermediate nodes run at precision + kGuardBits; the result is rounded
/// outward to `precision`. Propagates DomainError, BranchCutError and
/// DivisionByZeroInterval.
CInterval eval(const Expr& e, long precision);
CInterval eval(std::string_view source, long precision);

struct CertifyOptions {
  long start_precision = 128;
  long max_precision = 512;
  /// Tolerance of "~=". Overrides a `~=[eps]` literal; default is 2^(-start_precision/2).
  std::optional<RInterval> tolerance;
};

/// Decides a top-level comparison, doubling precision on overlap.
///
/// Both sides must evaluate to enclosures whose imaginary part contains 0 and
/// is narrower than 2^(-p/2); otherwise NonRealComparand is thrown.
Verdict certify(const Expr& claim, const CertifyOptions& options = {});
Verdict certify(std::string_view source, const CertifyOptions& options = {});

}  // namespace transcert::expr
