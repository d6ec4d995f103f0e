#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "transcert/errors.hpp"

using namespace transcert::cli;

namespace {

// Points at the offending byte under the echoed source.
void report_syntax_error(const transcert::SyntaxError& e, const std::string& source) {
  std::cerr << e.what() << "\n  " << source << "\n  " << std::string(std::min(e.offset(), source.size()), ' ')
            << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified evaluation of transcendental claims, matrix identities and convex-curve conjectures"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "transcert 0.1.0");

  RunConfig cfg;
  bool json = false;
  bool markdown = false;
  app.add_option("-p,--precision", cfg.precision, "Working precision in bits")
      ->envname("TRANSCERT_PRECISION")
      ->check(CLI::Range(24L, 1L << 20));
  app.add_option("--max-precision", cfg.max_precision, "Upper limit for precision escalation")
      ->check(CLI::Range(24L, 1L << 20));
  auto* json_flag = app.add_flag("--json", json, "JSON output");
  app.add_flag("--markdown", markdown, "Markdown output")->excludes(json_flag);
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");
  app.add_option("--trials", cfg.trials, "Number of sampled trials")->check(CLI::PositiveNumber);
  app.add_option("--grid", cfg.grid, "Grid step for residual tables");
  app.add_option("--def", cfg.definition, "Diameter definition for curves")->check(CLI::IsMember({"chord", "width"}));
  app.add_flag("--timing", cfg.timing, "Record runtimes in reports");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Enclose an expression or certify a comparison");
  eval->fallthrough();
  eval->add_option("expression", eval_args.expression, "Expression, e.g. \"pi^2 < 4*e\"")->required();
  eval->add_option("--tolerance", eval_args.tolerance, "Tolerance of ~= (decimal)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run registered claims and compare with the expected verdicts");
  verify->fallthrough();
  verify->add_option("ids", verify_args.ids, "Claim ids (C01..C18) or 'all'");
  verify->add_option("--expected", verify_args.expected_file, "Expected-verdict table overriding the built-in one");
  verify->add_flag("--list", verify_args.list, "List registered claims");

  CurveArgs curve_args;
  auto* curves = app.add_subcommand("curves", "Convex-curve measures and conjecture falsification");
  curves->fallthrough();
  curves->require_subcommand(1);
  auto add_shape = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--circle", curve_args.circle, "Circle radius");
    sub->add_option("--ellipse", curve_args.ellipse, "Semi-axes A >= B and an optional angle")->expected(2, 3);
    sub->add_option("--polygon", curve_args.polygon, "Vertices x1 y1 x2 y2 ... (convex hull is taken)");
    sub->add_option("--ngon", curve_args.ngon, "Regular n-gon with circumradius 1");
    sub->add_option("--dirs", curve_args.directions, "Sampled directions")->check(CLI::Range(64, 1 << 20));
  };
  auto* curves_report = curves->add_subcommand("report", "Measures and conjecture report for one curve");
  add_shape(curves_report);
  auto* curves_falsify = curves->add_subcommand("falsify", "Search a curve family for counterexamples");
  curves_falsify->fallthrough();
  curves_falsify->add_option("--family", curve_args.family, "random, ellipse or ngon")
      ->check(CLI::IsMember({"random", "ellipse", "ngon"}));

  YbeArgs ybe_args;
  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter operator checks");
  ybe->fallthrough();
  ybe->add_option("--alpha", ybe_args.alpha, "Rational alpha of the antidiagonal family (default 1)");
  ybe->add_flag("--majorana", ybe_args.majorana, "Use the Majorana matrix");
  ybe->add_option("--x", ybe_args.x, "Spectral parameter x");
  ybe->add_option("--y", ybe_args.y, "Spectral parameter y");

  LiouvilleArgs liouville_args;
  auto* liouville = app.add_subcommand("liouville", "Liouville constant computations");
  liouville->fallthrough();
  liouville->require_subcommand(1);
  auto* partial = liouville->add_subcommand("partial", "Exact partial sum");
  partial->fallthrough();
  partial->add_option("--n", liouville_args.n, "Number of terms")->check(CLI::Range(1u, 12u));
  partial->add_option("--base", liouville_args.base, "Base b >= 2");
  auto* witness = liouville->add_subcommand("witness", "Rational approximation witness");
  witness->fallthrough();
  witness->add_option("--n", liouville_args.n, "n in [1, 5]");
  auto* quadratic = liouville->add_subcommand("quadratic", "Roots of the Liouville-coefficient quadratic");
  quadratic->fallthrough();
  quadratic->add_option("--terms", liouville_args.terms, "Terms kept in A and C")->check(CLI::Range(2u, 7u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  cfg.output = json ? Output::Json : markdown ? Output::Markdown : Output::Text;
  if (cfg.precision > cfg.max_precision) {
    std::cerr << "error: --precision exceeds --max-precision\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      try {
        return cmd_eval(eval_args, cfg);
      } catch (const transcert::SyntaxError& e) {
        report_syntax_error(e, eval_args.expression);
        return kExitUsage;
      }
    }
    if (verify->parsed()) return cmd_verify(verify_args, cfg);
    if (curves_report->parsed()) return cmd_curves_report(curve_args, cfg);
    if (curves_falsify->parsed()) return cmd_curves_falsify(curve_args, cfg);
    if (ybe->parsed()) return cmd_ybe(ybe_args, cfg);
    if (partial->parsed()) return cmd_liouville_partial(liouville_args, cfg);
    if (witness->parsed()) return cmd_liouville_witness(liouville_args, cfg);
    if (quadratic->parsed()) return cmd_liouville_quadratic(liouville_args, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
