#include "transcert/verdict.hpp"

namespace transcert {

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::CertifiedTrue:
      return "CertifiedTrue";
    case VerdictKind::CertifiedFalse:
      return "CertifiedFalse";
    case VerdictKind::ConsistentWithin:
      return "ConsistentWithin";
    case VerdictKind::Undecided:
      break;
  }
  return "Undecided";
}

std::optional<VerdictKind> parse_verdict_kind(std::string_view text) {
  for (auto k : {VerdictKind::CertifiedTrue, VerdictKind::CertifiedFalse, VerdictKind::ConsistentWithin,
                 VerdictKind::Undecided}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

}  // namespace transcert
