#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transcert/claims/report.hpp"

namespace transcert::claims {

struct Claim {
  std::string id;
  std::string name;
  std::string statement;
  std::string anchor;
  long default_precision = 128;
  std::optional<VerdictKind> asserted;
  /// Fills verdict, enclosures, notes and table. Receives the resolved start precision.
  std::function<void(Report&, const RunOptions&, long precision)> procedure;
};

class Registry {
 public:
  /// C01 through C18.
  static const Registry& builtin();

  const std::vector<Claim>& claims() const { return claims_; }
  /// Throws UnknownClaim.
  const Claim& find(std::string_view id) const;
  Report run(std::string_view id, const RunOptions& options = {}) const;

 private:
  std::vector<Claim> claims_;
};

Report run_claim(std::string_view id, long p_start, long p_max);

/// Verdict table the build is regressed against.
struct Expected {
  VerdictKind verdict;
  std::string note;
};
using ExpectedTable = std::map<std::string, Expected>;

/// Parses {"claims": {"C01": {"verdict": "...", "note": "..."}, ...}}. Throws Error.
ExpectedTable parse_expected(std::string_view json_text);
/// The table shipped with this build.
const ExpectedTable& builtin_expected();
std::string_view builtin_expected_source();

}  // namespace transcert::claims
