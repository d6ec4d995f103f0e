#pragma once

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "transcert/verdict.hpp"

namespace transcert::claims {

struct RunOptions {
  /// Starting precision; the claim's default when unset.
  std::optional<long> precision;
  long max_precision = 512;
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;
  /// Step of the (x, y) grid in the YBE residual table.
  std::optional<double> grid_step;
  /// Record wall-clock runtime. Off by default so reports are reproducible byte for byte.
  bool timing = false;
};

struct NamedEnclosure {
  std::string name;
  CInterval value;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string id;
  std::string name;
  std::string statement;
  std::string anchor;
  Verdict verdict;
  /// Direction asserted by the source, kept apart from the computed verdict.
  std::optional<VerdictKind> asserted;
  std::vector<NamedEnclosure> enclosures;
  std::vector<std::string> notes;
  std::optional<Table> table;
  std::optional<double> runtime_ms;

  /// nullopt when nothing is asserted. ConsistentWithin counts as agreeing with an asserted truth.
  std::optional<bool> agrees_with_assertion() const;
};

/// Decimal digits used when printing an enclosure of the given precision.
int display_digits(long precision);

nlohmann::json interval_json(const RInterval& x);
nlohmann::json interval_json(const CInterval& z);
nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);
std::string to_markdown(const std::vector<Report>& reports);

}  // namespace transcert::claims
