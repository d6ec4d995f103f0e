#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace transcert::cli {

enum class Output { Text, Json, Markdown };

struct RunConfig {
  long precision = 128;
  long max_precision = 512;
  Output output = Output::Text;
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;
  std::optional<double> grid;
  std::string definition = "width";
  bool timing = false;
};

// Exit codes shared by every command.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitUsage = 3;

struct EvalArgs {
  std::string expression;
  std::optional<std::string> tolerance;
};

struct VerifyArgs {
  std::vector<std::string> ids;
  std::optional<std::string> expected_file;
  bool list = false;
};

struct CurveArgs {
  std::optional<double> circle;
  std::vector<double> ellipse;  // a b [angle]
  std::vector<double> polygon;  // x1 y1 x2 y2 ...
  std::optional<int> ngon;
  std::string family = "random";
  int directions = 720;
};

struct YbeArgs {
  std::optional<std::string> alpha;
  bool majorana = false;
  double x = 0.3;
  double y = 0.7;
};

struct LiouvilleArgs {
  unsigned n = 3;
  long base = 10;
  unsigned terms = 4;
};

int cmd_eval(const EvalArgs& args, const RunConfig& cfg);
int cmd_verify(const VerifyArgs& args, const RunConfig& cfg);
int cmd_curves_report(const CurveArgs& args, const RunConfig& cfg);
int cmd_curves_falsify(const CurveArgs& args, const RunConfig& cfg);
int cmd_ybe(const YbeArgs& args, const RunConfig& cfg);
int cmd_liouville_partial(const LiouvilleArgs& args, const RunConfig& cfg);
int cmd_liouville_witness(const LiouvilleArgs& args, const RunConfig& cfg);
int cmd_liouville_quadratic(const LiouvilleArgs& args, const RunConfig& cfg);

}  // namespace transcert::cli
