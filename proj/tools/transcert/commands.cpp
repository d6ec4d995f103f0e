#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "transcert/claims/registry.hpp"
#include "transcert/curves.hpp"
#include "transcert/errors.hpp"
#include "transcert/expr/evaluator.hpp"
#include "transcert/expr/parser.hpp"
#include "transcert/liouville.hpp"
#include "transcert/ybe.hpp"

namespace transcert::cli {

namespace {

using nlohmann::json;

int exit_code(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::CertifiedTrue:
      return kExitTrue;
    case VerdictKind::CertifiedFalse:
      return kExitFalse;
    default:
      return kExitUndecided;
  }
}

std::string show(const CInterval& z) {
  const int d = claims::display_digits(z.precision());
  return z.is_real() ? z.re().to_string(d) : z.to_string(d);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

curves::Definition definition(const RunConfig& cfg) {
  const auto d = curves::parse_definition(cfg.definition);
  if (!d) throw Error("--def must be chord or width");
  return *d;
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

int cmd_eval(const EvalArgs& args, const RunConfig& cfg) {
  const expr::Expr e = expr::parse(args.expression);
  if (const auto* cmp = std::get_if<expr::Comparison>(&e.node)) {
    (void)cmp;
    expr::CertifyOptions opts{cfg.precision, cfg.max_precision, std::nullopt};
    if (args.tolerance) opts.tolerance = RInterval::from_decimal(*args.tolerance, cfg.precision);
    const Verdict v = expr::certify(e, opts);
    if (cfg.output == Output::Json) {
      json j{{"expression", expr::to_string(e)},
             {"verdict", to_string(v.kind)},
             {"within", v.within ? json(v.within->to_decimal(17, Round::Up)) : json(nullptr)},
             {"lhs", v.lhs ? claims::interval_json(*v.lhs) : json(nullptr)},
             {"rhs", v.rhs ? claims::interval_json(*v.rhs) : json(nullptr)},
             {"precision", v.precision_used}};
      emit(j);
    } else {
      std::cout << to_string(v.kind);
      if (v.kind == VerdictKind::ConsistentWithin && v.within) std::cout << "(" << v.within->to_decimal(6, Round::Up) << ")";
      std::cout << "\n";
      if (v.lhs) std::cout << "lhs: " << show(*v.lhs) << "\n";
      if (v.rhs) std::cout << "rhs: " << show(*v.rhs) << "\n";
      std::cout << "precision: " << v.precision_used << " bits\n";
    }
    return exit_code(v.kind);
  }
  const CInterval z = expr::eval(e, cfg.precision);
  if (cfg.output == Output::Json) {
    emit(json{{"expression", expr::to_string(e)}, {"value", claims::interval_json(z)}, {"precision", cfg.precision}});
  } else {
    std::cout << show(z) << "\n";
  }
  return kExitTrue;
}

int cmd_verify(const VerifyArgs& args, const RunConfig& cfg) {
  const auto& registry = claims::Registry::builtin();
  if (args.list) {
    for (const auto& c : registry.claims()) std::cout << c.id << "  " << c.name << "  " << c.statement << "\n";
    return kExitTrue;
  }

  claims::ExpectedTable expected = claims::builtin_expected();
  if (args.expected_file) {
    std::ifstream in(*args.expected_file);
    if (!in) throw Error("cannot read " + *args.expected_file);
    std::stringstream buf;
    buf << in.rdbuf();
    expected = claims::parse_expected(buf.str());
  }

  std::vector<std::string> ids;
  if (args.ids.empty() || (args.ids.size() == 1 && args.ids[0] == "all")) {
    for (const auto& c : registry.claims()) ids.push_back(c.id);
  } else {
    for (const auto& id : args.ids) ids.push_back(registry.find(id).id);
  }

  claims::RunOptions opts;
  opts.precision = cfg.precision;
  opts.max_precision = cfg.max_precision;
  opts.seed = cfg.seed;
  opts.trials = cfg.trials;
  opts.grid_step = cfg.grid;
  opts.timing = cfg.timing;

  std::vector<claims::Report> reports;
  std::vector<std::string> mismatches;
  json items = json::array();
  for (const auto& id : ids) {
    claims::Report r = registry.run(id, opts);
    const auto it = expected.find(r.id);
    const bool matches = it != expected.end() && it->second.verdict == r.verdict.kind;
    if (!matches) mismatches.push_back(r.id);
    json j = claims::to_json(r);
    j["expected"] = it != expected.end() ? json(to_string(it->second.verdict)) : json(nullptr);
    j["matches_expected"] = matches;
    items.push_back(std::move(j));
    reports.push_back(std::move(r));
  }

  if (cfg.output == Output::Json) {
    emit(json{{"tool", "transcert"},
              {"precision", cfg.precision},
              {"max_precision", cfg.max_precision},
              {"seed", cfg.seed},
              {"trials", cfg.trials},
              {"reports", items},
              {"summary", {{"total", ids.size()}, {"matching", ids.size() - mismatches.size()}, {"mismatches", mismatches}}}});
  } else if (cfg.output == Output::Markdown) {
    std::cout << claims::to_markdown(reports);
  } else {
    for (std::size_t k = 0; k < reports.size(); ++k) {
      std::cout << claims::to_text(reports[k]);
      if (!items[k]["matches_expected"].get<bool>()) std::cout << "  REGRESSION: expected " << items[k]["expected"] << "\n";
      std::cout << "\n";
    }
    std::cout << ids.size() - mismatches.size() << "/" << ids.size() << " claims match the expected verdicts\n";
  }
  return mismatches.empty() ? kExitTrue : kExitFalse;
}

namespace {

curves::Curve curve_from(const CurveArgs& a) {
  int given = (a.circle ? 1 : 0) + (a.ellipse.empty() ? 0 : 1) + (a.polygon.empty() ? 0 : 1) + (a.ngon ? 1 : 0);
  if (given != 1) throw Error("give exactly one of --circle, --ellipse, --polygon, --ngon");
  if (a.circle) return curves::Circle{*a.circle, {}};
  if (!a.ellipse.empty()) {
    if (a.ellipse.size() < 2 || a.ellipse.size() > 3) throw Error("--ellipse takes A B [ANGLE]");
    return curves::Ellipse{a.ellipse[0], a.ellipse[1], {}, a.ellipse.size() == 3 ? a.ellipse[2] : 0.0};
  }
  if (a.ngon) return curves::regular_polygon(*a.ngon);
  if (a.polygon.size() % 2 != 0) throw Error("--polygon takes x y pairs");
  std::vector<curves::Point> pts;
  for (std::size_t k = 0; k < a.polygon.size(); k += 2) pts.push_back({a.polygon[k], a.polygon[k + 1]});
  return curves::make_convex_polygon(std::move(pts));
}

}  // namespace

// Curve commands always emit JSON.
int cmd_curves_report(const CurveArgs& args, const RunConfig& cfg) {
  const curves::Curve c = curve_from(args);
  const curves::ConjectureReport r = curves::conjecture_report(c, definition(cfg), args.directions);
  json j = r;
  j["curve"] = c;
  emit(j);
  return kExitTrue;
}

int cmd_curves_falsify(const CurveArgs& args, const RunConfig& cfg) {
  const auto family = curves::parse_family(args.family);
  if (!family) throw Error("--family must be random, ellipse or ngon");
  const curves::FalsifyResult r = curves::falsify_search(*family, definition(cfg), cfg.trials, cfg.seed);
  emit(json(r));
  return kExitTrue;
}

int cmd_ybe(const YbeArgs& args, const RunConfig& cfg) {
  if (args.majorana && args.alpha) throw Error("--alpha and --majorana are exclusive");
  ybe::QMatrix exact;
  ybe::DMatrix approx;
  std::string label;
  if (args.majorana) {
    exact = ybe::majorana_J<ybe::GaussianRational>();
    approx = ybe::majorana_J<std::complex<double>>();
    label = "majorana";
  } else {
    const BigRational alpha = BigRational::parse(args.alpha.value_or("1"));
    exact = ybe::alpha_family(alpha);
    approx = ybe::alpha_family(alpha.to_double());
    label = "alpha=" + alpha.to_string();
  }
  const auto rep = ybe::j_report(exact);
  const double braid = ybe::ybe_residual(approx, args.x, args.y);
  const double euler = ybe::euler_matrix_residual(approx);

  json table = json::array();
  if (cfg.grid) {
    if (!(*cfg.grid > 0)) throw Error("--grid must be positive");
    for (int i = 0; -2.0 + i * *cfg.grid <= 2.0 + 1e-12; ++i)
      for (int k = 0; -2.0 + k * *cfg.grid <= 2.0 + 1e-12; ++k) {
        const double x = -2.0 + i * *cfg.grid, y = -2.0 + k * *cfg.grid;
        table.push_back({x, y, ybe::ybe_residual(approx, x, y)});
      }
  }

  if (cfg.output == Output::Text) {
    std::cout << "J: " << label << "\n"
              << "J^2 + I exactly zero: " << (rep.square_plus_identity.is_zero() ? "yes" : "no") << "\n"
              << "J12 J23 - J23 J12 exactly zero: " << (rep.commutator.is_zero() ? "yes" : "no") << "\n"
              << "J12 J23 + J23 J12 exactly zero: " << (rep.anticommutator.is_zero() ? "yes" : "no") << "\n"
              << "braid residual at (" << args.x << ", " << args.y << "): " << sci(braid) << "\n"
              << "||e^(pi J) + I||: " << sci(euler) << "\n";
    for (const auto& row : table)
      std::cout << "  " << row[0].get<double>() << " " << row[1].get<double>() << " " << sci(row[2].get<double>()) << "\n";
  } else {
    emit(json{{"J", label},
              {"squares_to_minus_identity", rep.squares_to_minus_identity},
              {"commutation_12_23", rep.commutation_12_23},
              {"anticommutation_12_23", rep.anticommutation_12_23},
              {"exact", {{"square_plus_identity_zero", rep.square_plus_identity.is_zero()},
                         {"commutator_zero", rep.commutator.is_zero()},
                         {"anticommutator_zero", rep.anticommutator.is_zero()}}},
              {"ybe_residual", {{"x", args.x}, {"y", args.y}, {"value", braid}}},
              {"euler_matrix_residual", euler},
              {"grid", table}});
  }
  return kExitTrue;
}

int cmd_liouville_partial(const LiouvilleArgs& args, const RunConfig& cfg) {
  const BigRational s = liouville::liouville_partial(args.n, args.base);
  if (cfg.output == Output::Text) {
    std::cout << s << "\n";
  } else {
    emit(json{{"n", args.n}, {"base", args.base}, {"value", s.to_string()}});
  }
  return kExitTrue;
}

int cmd_liouville_witness(const LiouvilleArgs& args, const RunConfig& cfg) {
  const liouville::Witness w = liouville::approx_witness(args.n);
  if (cfg.output == Output::Text) {
    std::cout << "n = " << w.n << "\n"
              << "p = " << w.p.get_str() << "\n"
              << "q = 10^" << w.q.get_str().size() - 1 << "\n"
              << "gap in (" << w.gap_lower << ", " << w.gap_upper << ")\n"
              << "q^-n = " << w.q_power << "\n"
              << "holds = " << (w.holds ? "true" : "false") << "\n";
  } else {
    emit(json{{"n", w.n},
              {"p", w.p.get_str()},
              {"q", w.q.get_str()},
              {"gap_lower", w.gap_lower.to_string()},
              {"gap_upper", w.gap_upper.to_string()},
              {"q_power", w.q_power.to_string()},
              {"holds", w.holds}});
  }
  return kExitTrue;
}

int cmd_liouville_quadratic(const LiouvilleArgs& args, const RunConfig& cfg) {
  const liouville::Quadratic q = liouville::liouville_quadratic(args.terms, cfg.precision);
  const int d = claims::display_digits(cfg.precision);
  if (cfg.output == Output::Text) {
    std::cout << "root1 = " << q.root1 << " (exact substitution: " << (q.root1_verified ? "yes" : "no") << ")\n"
              << "root2 in " << q.root2.to_string(d) << "\n"
              << "A in " << q.a.to_string(d) << "\n"
              << "C in " << q.c.to_string(d) << "\n"
              << "A = C + 1/10: " << (q.a_is_c_plus_tenth ? "yes" : "no") << "\n"
              << "factorization expands exactly: " << (q.factorization_verified ? "yes" : "no") << "\n"
              << "residual at root2 in " << q.residual.to_string(d) << "\n";
  } else {
    emit(json{{"terms", args.terms},
              {"root1", q.root1.to_string()},
              {"root2", claims::interval_json(q.root2)},
              {"A", claims::interval_json(q.a)},
              {"C", claims::interval_json(q.c)},
              {"residual", claims::interval_json(q.residual)},
              {"root1_verified", q.root1_verified},
              {"factorization_verified", q.factorization_verified},
              {"a_is_c_plus_tenth", q.a_is_c_plus_tenth}});
  }
  return kExitTrue;
}

}  // namespace transcert::cli
