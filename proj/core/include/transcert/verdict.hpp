#pragma once

#include <optional>
#include <string_view>

#include "transcert/cinterval.hpp"

namespace transcert {

enum class VerdictKind { CertifiedTrue, CertifiedFalse, ConsistentWithin, Undecided };

/// Outcome of certifying a claim.
///
/// CertifiedTrue / CertifiedFalse are only produced from strict separation of
/// enclosures. ConsistentWithin carries the band `within` in which the two
/// sides agree; Undecided keeps the last overlapping enclosures.
struct Verdict {
  VerdictKind kind = VerdictKind::Undecided;
  std::optional<BigFloat> within;
  std::optional<CInterval> lhs;
  std::optional<CInterval> rhs;
  long precision_used = 0;
};

const char* to_string(VerdictKind kind);
std::optional<VerdictKind> parse_verdict_kind(std::string_view text);

}  // namespace transcert
