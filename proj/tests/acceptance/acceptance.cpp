// Acceptance criteria 1-13. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. The optional argument is the path of the CLI binary,
// used for the byte-for-byte determinism check.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "transcert/cinterval.hpp"
#include "transcert/claims/procedures.hpp"
#include "transcert/claims/registry.hpp"
#include "transcert/curves.hpp"
#include "transcert/elementary.hpp"
#include "transcert/expr/evaluator.hpp"
#include "transcert/liouville.hpp"
#include "transcert/quadrature.hpp"
#include "transcert/ybe.hpp"

using namespace transcert;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

bool encloses(const RInterval& x, const char* oracle_text) {
  const BigRational v = BigRational::parse(oracle_text);
  BigRational band = abs(v) * BigRational::power(10, -62);
  if (band.is_zero()) band = BigRational::power(10, -70);
  return x.lo().to_rational() <= v + band && v - band <= x.hi().to_rational();
}

bool is(const Verdict& v, VerdictKind k) { return v.kind == k; }

bool has_note(const claims::Report& r, const std::string& needle) {
  for (const auto& n : r.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

std::string run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  if (status != 0) out += "\n<exit " + std::to_string(status) + ">";
  return out;
}

Outcome constants() {
  Outcome o;
  for (const auto& [x, digits, name] : {std::tuple{const_pi(200), oracle::kPi50, "pi"},
                                        std::tuple{const_e(200), oracle::kE50, "e"}}) {
    const BigRational lo = BigRational::parse(digits);
    const BigRational hi = lo + BigRational::power(10, -50);
    o.require(lo <= x.lo().to_rational() && x.hi().to_rational() < hi, std::string(name) + " digits");
    o.require(x.width() <= BigFloat::power_of_two(-198), std::string(name) + " width");
  }
  return o;
}

Outcome euler() {
  Outcome o;
  const CInterval ipi(RInterval::from_int(0, 128), const_pi(128));
  const RInterval m = cabs(cexp(ipi) + CInterval::from_ints(1, 0, 128));
  o.require(m.lo().sign() >= 0, "lower end below 0");
  o.require(m.hi() <= BigFloat::power_of_two(-96), "upper end above 2^-96");
  return o;
}

Outcome new3() {
  Outcome o;
  const RInterval d = expr::eval("abs(exp(i)-pi)", 128).re();
  o.require(d.width().to_double() <= 1e-25, "width");
  o.require(encloses(d, oracle::kAbsExpIMinusPi), "oracle value");
  const claims::Report c02 = claims::run_claim("C02", 128, 512);
  o.require(is(c02.verdict, VerdictKind::CertifiedFalse), "C02 verdict");
  o.require(!c02.notes.empty() && c02.agrees_with_assertion() == false, "C02 discrepancy note");
  const claims::Report c03 = claims::run_claim("C03", 128, 512);
  o.require(c03.verdict.lhs && encloses(c03.verdict.lhs->re(), oracle::kAngleB), "C03 angle");
  o.require(c03.verdict.lhs && c03.verdict.lhs->re().hi() < BigFloat::from_int(1), "C03 B < 1");
  return o;
}

Outcome new4() {
  Outcome o;
  const claims::Report r = claims::run_claim("C04", 128, 512);
  o.require(is(r.verdict, VerdictKind::CertifiedTrue), "verdict");
  o.require(r.verdict.precision_used <= 256, "precision");
  o.require(r.verdict.lhs && encloses(r.verdict.lhs->re(), oracle::kNew4), "lhs");
  o.require(r.verdict.rhs && encloses(r.verdict.rhs->re(), oracle::kNew4), "rhs");
  o.require(has_note(r, "0.95"), "note on the stated approximation");
  return o;
}

Outcome new6() {
  Outcome o;
  const auto red = claims::claim_new6_reduction(128);
  o.require(is(red.verdict, VerdictKind::CertifiedTrue), "2 sqrt(e) > pi");
  o.require(encloses(red.margin, oracle::kTwoSqrtEMinusPi), "margin");
  o.require(red.independence_ok && red.identity_ok, "independence of Im z");
  const auto grid = claims::claim_new6_grid(BigRational(1, 4), 3, 128, 512);
  o.require(is(grid.verdict, VerdictKind::CertifiedTrue) && grid.certified == grid.points && grid.points == 625,
            "grid");
  return o;
}

Outcome gauss() {
  Outcome o;
  const Verdict v = quad::claim_gauss_identity(4, 2000, 128);
  o.require(is(v, VerdictKind::ConsistentWithin) && v.within && v.within->to_double() <= 1e-7, "band");
  o.require(v.rhs && encloses(v.rhs->re(), oracle::kSqrtPi), "sqrt(pi)");
  return o;
}

Outcome integral_bound() {
  Outcome o;
  for (const auto& [a, b] : {std::pair{0, 1}, std::pair{-1, 2}, std::pair{1, 3}}) {
    const auto r = quad::claim_integral_bound(a, b, 400, 128);
    o.require(is(r.verdict, VerdictKind::CertifiedTrue), "range " + std::to_string(a) + "," + std::to_string(b));
    o.require(is(r.discriminant, VerdictKind::CertifiedTrue), "discriminant verdict");
    o.require(r.discriminant.lhs && encloses(r.discriminant.lhs->re(), oracle::kDisc), "discriminant value");
    o.require(r.discriminant.lhs && std::fabs(r.discriminant.lhs->re().midpoint().to_double() + 1.0035) < 1e-4,
              "discriminant midpoint");
  }
  o.require(is(claims::run_claim("C08", 128, 512).verdict, VerdictKind::CertifiedTrue), "C08");
  return o;
}

Outcome scalars() {
  Outcome o;
  for (const char* id : {"C09", "C10", "C11"})
    o.require(is(claims::run_claim(id, 128, 512).verdict, VerdictKind::CertifiedTrue), id);
  const auto t = claims::claim_r_threshold(BigRational(1, 1000000), 128);
  o.require(t.bracket_ok, "exact bracket");
  o.require(t.at_four == BigRational(244140625, 100000000) && t.at_five == BigRational(248832, 100000), "bracket values");
  o.require(t.r_star.width().to_double() <= 1e-6, "width");
  o.require(encloses(t.r_star, oracle::kRStar), "r* oracle");
  return o;
}

Outcome ybe_checks() {
  Outcome o;
  for (const BigRational& a : {BigRational(1, 2), BigRational(1), BigRational(2), BigRational(3)}) {
    const auto r = ybe::j_report(ybe::alpha_family(a));
    o.require(r.square_plus_identity.is_zero() && r.commutator.is_zero(), "exact axioms alpha=" + a.to_string());
    const auto jd = ybe::alpha_family(a.to_double());
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y) o.require(ybe::ybe_residual(jd, x, y) <= 1e-11, "braid residual");
    o.require(ybe::euler_matrix_residual(jd) <= 1e-12, "matrix Euler residual");
  }
  const auto m = ybe::j_report(ybe::majorana_J<ybe::GaussianRational>());
  o.require(m.anticommutator.is_zero(), "Majorana anticommutator");
  o.require(!m.commutator.is_zero(), "Majorana commutator nonzero");
  return o;
}

Outcome inequality() {
  Outcome o;
  const auto f = ybe::matrix_inequality_fuzz(10000, 1, 128);
  o.require(f.samples == 10000 && f.holding == 10000, "all samples hold");
  o.require(f.all_consistent && f.max_certificate_gap <= 1e-12, "certificate agreement");
  const auto bad = ybe::matrix_inequality_check({1, 1, 1, 1}, 128);
  o.require(bad.violated && bad.trace_minus_pi.is_negative(), "trace < pi violates");
  return o;
}

Outcome curves_checks() {
  using namespace curves;
  Outcome o;
  for (Definition def : {Definition::Width, Definition::ChordThroughCentroid}) {
    const CurveMeasures c = measures(Circle{1.0, {}}, def);
    o.require(std::fabs(c.L / c.D - std::numbers::pi) <= 1e-12 && std::fabs(c.L / c.d - std::numbers::pi) <= 1e-12,
              "circle ratios");
  }
  const ConjectureReport e = conjecture_report(Ellipse{2, 1, {}, 0.0}, Definition::Width);
  o.require(std::fabs(e.m.L - 9.688448) <= 1e-5, "ellipse perimeter");
  o.require(e.holds_i == curves::Outcome::Holds && e.holds_iii == curves::Outcome::Holds, "ellipse conjectures");
  const Curve tri = make_convex_polygon({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
  const ConjectureReport chord = conjecture_report(tri, Definition::ChordThroughCentroid);
  o.require(std::fabs(chord.l_over_D - 3.4641) < 1e-4 && chord.holds_i == curves::Outcome::Fails, "triangle chord");
  const ConjectureReport width = conjecture_report(tri, Definition::Width);
  o.require(std::fabs(width.l_over_D - 3.0) < 1e-9 && std::fabs(width.l_over_d - 3.4641) < 1e-4 &&
                width.holds_i == curves::Outcome::Holds,
            "triangle width");
  const FalsifyResult f = falsify_search(Family::RandomPolygon, Definition::Width, 10000, 1);
  std::size_t iii = 0;
  for (const auto& c : f.counterexamples) iii += c.violates_iii ? 1 : 0;
  o.require(iii == 0, "random hulls violate (iii): " + std::to_string(iii));
  return o;
}

Outcome liouville_checks() {
  Outcome o;
  for (unsigned n = 1; n <= 5; ++n) o.require(liouville::approx_witness(n).holds, "witness n=" + std::to_string(n));
  const auto q = liouville::liouville_quadratic(4, 128);
  o.require(q.root1 == BigRational(-1) && q.root1_verified, "root1");
  o.require(encloses(q.root2, oracle::kLiouvilleRoot2), "root2");
  o.require(q.residual.contains_zero(), "residual");
  return o;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  std::string a, b;
  if (!cli.empty()) {
    const std::string cmd = "\"" + cli + "\" --json verify all 2>&1";
    a = run_command(cmd);
    b = run_command(cmd);
    o.require(a.find("\"reports\"") != std::string::npos, "CLI produced no report document");
  } else {
    for (std::string* out : {&a, &b}) {
      for (const auto& c : claims::Registry::builtin().claims())
        *out += claims::to_json(claims::Registry::builtin().run(c.id)).dump();
    }
  }
  o.require(!a.empty() && a == b, "outputs differ");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int number;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "constants pi and e to 50 decimals at 200 bits", 1.0, constants},
      {2, "|e^(i pi) + 1| inside [0, 2^-96] at 128 bits", 0.0, euler},
      {3, "|e^i - pi| enclosure, C02 refuted, C03 angle below 1", 1.0, new3},
      {4, "C04 identity at eps 1e-30 within 256 bits", 0.0, new4},
      {5, "2 sqrt(e) > pi and the 0.25 grid on [-3,3]^2", 5.0, new6},
      {6, "Gaussian integral consistent within 1e-7", 10.0, gauss},
      {7, "integral bound on three ranges and pi^2 - 4e < 0", 0.0, integral_bound},
      {8, "C09-C11 certified, r* enclosure of width <= 1e-6", 0.0, scalars},
      {9, "Yang-Baxter family, matrix Euler identity, Majorana J", 5.0, ybe_checks},
      {10, "matrix inequality fuzz on 10^4 samples", 0.0, inequality},
      {11, "curve measures and 10^4 random hulls", 30.0, curves_checks},
      {12, "Liouville witnesses and quadratic roots", 0.0, liouville_checks},
      {13, "verify all --json is byte-identical across runs", 0.0, [&] { return determinism(cli); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) o.require(false, "runtime over " + std::to_string(c.budget_s) + " s");
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " [" << c.number << "] " << c.title << " (" << static_cast<long>(secs * 1000)
         << " ms)";
    for (const auto& f : o.failures) line << "\n       " << f;
    std::cout << line.str() << std::endl;
    failed += o.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
