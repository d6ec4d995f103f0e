#include "transcert/claims/registry.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <numbers>

#include "transcert/claims/procedures.hpp"
#include "transcert/elementary.hpp"
#include "transcert/errors.hpp"
#include "transcert/expr/evaluator.hpp"
#include "transcert/liouville.hpp"
#include "transcert/quadrature.hpp"
#include "transcert/ybe.hpp"

namespace transcert::claims {

namespace detail {
extern const std::string_view kExpectedVerdicts;
}  // namespace detail

namespace {

using expr::certify;
using expr::eval;

constexpr auto True = VerdictKind::CertifiedTrue;
constexpr auto False = VerdictKind::CertifiedFalse;
constexpr auto Within = VerdictKind::ConsistentWithin;
constexpr auto Unknown = VerdictKind::Undecided;

Verdict check(const std::string& src, const RunOptions& o, long p, std::optional<RInterval> tol = std::nullopt) {
  return certify(src, expr::CertifyOptions{p, std::max(p, o.max_precision), std::move(tol)});
}

CInterval real(const RInterval& x) { return CInterval(x); }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string decimal(const RInterval& x, int digits = 12) {
  return x.to_string(digits);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void euler_identity(Report& r, const RunOptions& o, long p) {
  const RInterval eps = RInterval::point(BigFloat::power_of_two(-96), p);
  r.verdict = check("abs(exp(i*pi) + 1) ~= 0", o, p, eps);
  const Verdict unified = check(unified_f("pi*i", "0") + " ~= 0", o, p, eps);
  r.enclosures.push_back({"e^(i pi) + 1", eval("exp(i*pi) + 1", r.verdict.precision_used)});
  r.enclosures.push_back({"f(pi i, 0)", eval(unified_f("pi*i", "0"), r.verdict.precision_used)});
  r.notes.push_back("tolerance 2^-96");
  r.notes.push_back(std::string("unified form f(pi i, 0) = |e^(pi i) + e^0|: ") + to_string(unified.kind));
}

void new3_inequality(Report& r, const RunOptions& o, long p) {
  r.verdict = check("abs(exp(i) - pi) < e", o, p);
  const long q = r.verdict.precision_used;
  const Verdict unified = check(unified_f("i", "pi*i + ln(pi)") + " < e", o, p);
  const RInterval gap = eval("abs(exp(i) - pi) - e", q).re();
  r.enclosures.push_back({"|e^i - pi| - e", real(gap)});
  r.enclosures.push_back({"(|e^i - pi| - e)/e", real(div(gap, const_e(q), q))});
  if (r.verdict.kind == False) {
    r.notes.push_back("DISCREPANCY: the source asserts |e^i - pi| < e, but the enclosures separate the other way: "
                      "|e^i - pi| - e lies in " + decimal(gap) + ".");
  }
  r.notes.push_back("Whether an approximate equality was intended is not settled by the source; the distance above "
                    "measures the gap.");
  r.notes.push_back(std::string("unified form f(i, pi i + ln pi) = |e^i + e^(pi i) pi| < e: ") + to_string(unified.kind));
}

void triangle(Report& r, const RunOptions&, long p) {
  Report t = claim_triangle_angle(p);
  r.verdict = t.verdict;
  r.enclosures = std::move(t.enclosures);
  r.notes = std::move(t.notes);
}

void new4_identity(Report& r, const RunOptions& o, long p) {
  r.verdict = check("abs(pi^i - i^pi) ~= 2*sin(pi^2/4 - ln(sqrt(pi)))", o, p, RInterval::from_decimal("1e-30", p));
  const long q = r.verdict.precision_used;
  r.enclosures.push_back({"pi^i", eval("pi^i", q)});
  r.enclosures.push_back({"i^pi", eval("i^pi", q)});
  r.enclosures.push_back({"sin(pi^2/4 - ln sqrt(pi))", eval("sin(pi^2/4 - ln(sqrt(pi)))", q)});
  r.notes.push_back("tolerance 1e-30");
  r.notes.push_back("DISCREPANCY: the source ends with a value of about 0.95. Both sides equal about 1.8958; 0.9479 is "
                    "sin(pi^2/4 - ln sqrt(pi)) alone, so the factor 2 appears to have been dropped.");
}

void new6_grid(Report& r, const RunOptions& o, long p) {
  const GridResult g = claim_new6_grid(BigRational(1, 4), BigRational(3), p, o.max_precision);
  r.verdict = g.verdict;
  r.enclosures.push_back({"smallest modulus on the grid", real(g.min_modulus)});
  r.notes.push_back(std::to_string(g.certified) + " of " + std::to_string(g.points) +
                    " grid points certified above pi (step 1/4 over [-3, 3]^2)");
  r.notes.push_back("smallest modulus at z = " + g.min_x.to_string() + " + (" + g.min_y.to_string() + ")i");
  r.notes.push_back("grid evidence only; the statement for every z is the reduction claim C06");
}

void new6_reduction(Report& r, const RunOptions&, long p) {
  const ReductionResult red = claim_new6_reduction(p);
  r.verdict = red.verdict;
  r.enclosures.push_back({"2 sqrt(e) - pi", real(red.margin)});
  r.enclosures.push_back({"|e^(1-z) + e^conj(z)| at z = 2 - 3i", real(red.identity_lhs)});
  r.enclosures.push_back({"e^-1 + e^2", real(red.identity_rhs)});
  r.notes.push_back("|e^(1-z) + e^conj(z)| = e^(1-x) + e^x because both terms share the phase e^(-iy)");
  r.notes.push_back("modulus independent of Im z on the 6 x 7 sample: " + yes_no(red.independence_ok) +
                    ", max midpoint deviation " + sci(red.max_deviation));
  r.notes.push_back("x = 1/2 is the minimiser (values at 0.4 and 0.6 certified larger): " + yes_no(red.stationary_ok));
}

void gauss_identity(Report& r, const RunOptions&, long p) {
  r.verdict = quad::claim_gauss_identity(BigRational(4), 2000, p);
  r.enclosures.push_back({"tail bound e^-16/8", real(quad::gauss_tail(BigRational(4), p))});
  r.notes.push_back("Simpson on [-4, 4] with n = 2000 plus both tails; an improper integral admits a consistency "
                    "band, never a certificate");
}

void integral_bound(Report& r, const RunOptions&, long p) {
  const std::pair<long, long> ranges[] = {{0, 1}, {-1, 2}, {1, 3}};
  Table table{{"a", "b", "lhs", "rhs", "verdict"}, {}};
  bool all = true, any_false = false;
  quad::IntegralBound first;
  for (const auto& [a, b] : ranges) {
    const quad::IntegralBound ib = quad::claim_integral_bound(BigRational(a), BigRational(b), 400, p);
    if (table.rows.empty()) first = ib;
    all = all && ib.verdict.kind == True;
    any_false = any_false || ib.verdict.kind == False;
    table.rows.push_back({std::to_string(a), std::to_string(b), decimal(ib.verdict.lhs->re()),
                          decimal(ib.verdict.rhs->re()), to_string(ib.verdict.kind)});
  }
  r.verdict = first.verdict;
  r.verdict.kind = all && first.discriminant.kind == True ? True : any_false ? False : Unknown;
  r.enclosures.push_back({"pi^2 - 4e", *first.discriminant.lhs});
  r.notes.push_back(std::string("discriminant certificate pi^2 - 4e < 0: ") + to_string(first.discriminant.kind) +
                    "; it gives x^2 - pi x + e > 0, hence e^(-x^2) < e^(e - pi x) for every real x");
  r.notes.push_back("lhs/rhs shown for (a, b) = (0, 1)");
  r.table = std::move(table);
}

void disc_negative(Report& r, const RunOptions& o, long p) {
  r.verdict = check("pi^2 < 4*e", o, p);
  r.enclosures.push_back({"pi^2 - 4e", eval("pi^2 - 4*e", r.verdict.precision_used)});
  r.notes.push_back("equivalently the discriminant of x^2 - pi x + e is negative");
}

void circle_square_area(Report& r, const RunOptions& o, long p) {
  r.verdict = check("pi^3 > 4*e^2", o, p);
  r.enclosures.push_back({"pi^3 - 4e^2", eval("pi^3 - 4*e^2", r.verdict.precision_used)});
}

void xi_ix(Report& r, const RunOptions& o, long p) {
  const XiIxResult x = claim_xi_ix(p, std::max(p, o.max_precision));
  r.verdict = x.verdict;
  r.enclosures.push_back({"pi/2 - 1/e", eval("pi/2 - 1/e", p)});
  r.enclosures.push_back({"e^(1/e)", real(x.peak)});
  r.enclosures.push_back({"e^(pi/2)", real(x.target)});
  r.notes.push_back(std::string("pi/2 > 1/e: ") + to_string(x.half_pi_vs_inv_e.kind));
  r.notes.push_back(std::string("e^(1/e) < e^(pi/2): ") + to_string(x.peak_vs_target.kind));
  char buf[160];
  std::snprintf(buf, sizeof buf, "x^(1/x) below e^(1/e) on %zu log-spaced samples in [0.01, 100]: %s; sampled maximum at x = %.6f",
                x.samples, x.samples_below_peak ? "yes" : "no", x.sampled_argmax);
  r.notes.push_back(buf);
}

void r_threshold(Report& r, const RunOptions&, long p) {
  const RThreshold t = claim_r_threshold(BigRational(1, 1000000), p);
  r.verdict = t.verdict;
  r.enclosures.push_back({"r*", real(t.r_star)});
  r.enclosures.push_back({"pi^2/4", real(t.quarter_pi_squared)});
  r.notes.push_back("(5/4)^4 = " + t.at_four.to_string() + " < pi^2/4 < (6/5)^5 = " + t.at_five.to_string() + ": " +
                    yes_no(t.bracket_ok));
  r.notes.push_back("bisection to width 1e-6 in " + std::to_string(t.iterations) + " steps; real roots exist for r <= r*");
}

std::string power_of_ten(const BigRational& q) {
  // q = m * 10^-k with m in {1, 2}
  const std::string den = q.denominator().get_str();
  return q.numerator().get_str() + "e-" + std::to_string(den.size() - 1);
}

void liouville_approx(Report& r, const RunOptions&, long) {
  Table table{{"n", "digits of q", "gap upper bound", "q^-n", "holds"}, {}};
  bool all = true;
  for (unsigned n = 1; n <= liouville::kMaxWitness; ++n) {
    const liouville::Witness w = liouville::approx_witness(n);
    all = all && w.holds;
    table.rows.push_back({std::to_string(n), std::to_string(w.q.get_str().size()), power_of_ten(w.gap_upper),
                          power_of_ten(w.q_power), yes_no(w.holds)});
  }
  r.verdict.kind = all ? True : False;
  r.notes.push_back("exact rational arithmetic; p/q is the partial sum up to k = n and q = 10^(n!)");
  r.notes.push_back("n is capped at 5: q = 10^(6!) already has 721 digits");
  r.table = std::move(table);
}

void liouville_quadratic(Report& r, const RunOptions&, long p) {
  const liouville::Quadratic q = liouville::liouville_quadratic(4, p);
  const bool ok = q.root1_verified && q.factorization_verified && q.a_is_c_plus_tenth && q.residual.contains_zero();
  r.verdict.kind = ok ? True : False;
  r.verdict.lhs = real(q.root2);
  r.verdict.precision_used = p;
  r.enclosures.push_back({"A", real(q.a)});
  r.enclosures.push_back({"C", real(q.c)});
  r.enclosures.push_back({"residual at root2", real(q.residual)});
  r.notes.push_back("root1 = -1 by exact substitution: " + yes_no(q.root1_verified));
  r.notes.push_back("(Ax + C)(x + 1) expands exactly: " + yes_no(q.factorization_verified));
  r.notes.push_back("A starts at k = 0 and 0! = 1! = 1, so A = C + 1/10: " + yes_no(q.a_is_c_plus_tenth));
  r.notes.push_back("lhs is root2 = -C/A with 4 terms and tails below 2e-120");
}

const BigRational kAlphas[] = {BigRational(1, 2), BigRational(1), BigRational(2), BigRational(3)};

void matrix_euler(Report& r, const RunOptions&, long) {
  Table table{{"alpha", "J^2 + I exact zero", "||e^(pi J) + I||", "||e^(xJ) - R(x)||"}, {}};
  double worst = 0.0;
  bool exact = true;
  for (const BigRational& a : kAlphas) {
    const bool sq = ybe::j_report(ybe::alpha_family(a)).square_plus_identity.is_zero();
    const ybe::DMatrix j = ybe::alpha_family(a.to_double());
    const double euler = ybe::euler_matrix_residual(j);
    double closed = 0.0;
    for (double x : {0.5, 1.0, 2.0}) {
      const ybe::MatrixExp e = ybe::matrix_exp(std::complex<double>(x) * j);
      closed = std::max(closed, (e.value - ybe::r_of_x(j, x)).max_norm() + e.truncation_bound);
    }
    exact = exact && sq;
    worst = std::max({worst, euler, closed});
    table.rows.push_back({a.to_string(), yes_no(sq), sci(euler), sci(closed)});
  }
  r.verdict.kind = exact && worst <= 1e-12 ? Within : exact ? Unknown : False;
  r.verdict.within = BigFloat::from_double(worst);
  r.notes.push_back("matrix exponential by scaling and squaring in double precision; the Taylor truncation bound is "
                    "added to each residual");
  r.notes.push_back("residual norm: largest entry modulus");
  r.table = std::move(table);
}

void ybe_family(Report& r, const RunOptions& o, long) {
  const double step = o.grid_step.value_or(1.0);
  if (!(step > 0.0)) throw Error("grid step must be positive");
  std::vector<double> grid;
  for (int k = 0; -2.0 + k * step <= 2.0 + 1e-12; ++k) grid.push_back(-2.0 + k * step);

  bool exact = true;
  for (const BigRational& a : kAlphas) {
    const auto rep = ybe::j_report(ybe::alpha_family(a));
    exact = exact && rep.square_plus_identity.is_zero() && rep.commutator.is_zero();
  }
  Table table{{"x", "y"}, {}};
  for (const BigRational& a : kAlphas) table.columns.push_back("alpha=" + a.to_string());
  double worst = 0.0;
  for (double x : grid)
    for (double y : grid) {
      char cx[16], cy[16];
      std::snprintf(cx, sizeof cx, "%g", x);
      std::snprintf(cy, sizeof cy, "%g", y);
      std::vector<std::string> row{cx, cy};
      for (const BigRational& a : kAlphas) {
        const double res = ybe::ybe_residual(ybe::alpha_family(a.to_double()), x, y);
        worst = std::max(worst, res);
        row.push_back(sci(res));
      }
      table.rows.push_back(std::move(row));
    }
  r.verdict.kind = !exact ? False : worst <= 1e-11 ? Within : Unknown;
  r.verdict.within = BigFloat::from_double(worst);
  r.notes.push_back("J^2 = -I and J12 J23 = J23 J12 hold exactly in Gaussian-rational arithmetic for alpha in "
                    "{1/2, 1, 2, 3}: " + yes_no(exact));
  r.notes.push_back("residual of the colored braid relation in double precision over a " + std::to_string(grid.size()) +
                    " x " + std::to_string(grid.size()) + " grid on [-2, 2]^2");
  r.table = std::move(table);
}

void majorana(Report& r, const RunOptions&, long) {
  const auto rep = ybe::j_report(ybe::majorana_J<ybe::GaussianRational>());
  const bool sq = rep.square_plus_identity.is_zero();
  const bool anti = rep.anticommutator.is_zero();
  const bool comm_nonzero = !rep.commutator.is_zero();
  r.verdict.kind = sq && anti && comm_nonzero ? True : False;
  r.notes.push_back("J^2 = -I exactly: " + yes_no(sq));
  r.notes.push_back("J12 J23 + J23 J12 = 0 exactly: " + yes_no(anti));
  r.notes.push_back("J12 J23 - J23 J12 is nonzero (largest entry " + sci(rep.commutation_12_23) +
                    "), unlike the alpha family: " + yes_no(comm_nonzero));
  r.notes.push_back("braid-relation residual at (x, y) = (0.3, 0.7), reported without assertion: " +
                    sci(ybe::ybe_residual(ybe::majorana_J<std::complex<double>>(), 0.3, 0.7)));
}

void matrix_inequality(Report& r, const RunOptions& o, long p) {
  const ybe::InequalityFuzz fz = ybe::matrix_inequality_fuzz(o.trials, o.seed, p);
  const ybe::InequalityCheck good = ybe::matrix_inequality_check({2, 1, 1, 2}, p);
  const ybe::InequalityCheck bad = ybe::matrix_inequality_check({1, 1, 1, 1}, p);
  const bool ok = fz.holding == fz.samples && fz.all_consistent && fz.max_certificate_gap <= 1e-12 && good.holds;
  r.verdict.kind = ok ? True : fz.failures.empty() ? Unknown : False;
  r.verdict.precision_used = p;
  r.enclosures.push_back({"X = [[2,1],[1,2]]: off-diagonal 4 - pi", real(good.direct[1])});
  r.enclosures.push_back({"X = [[2,1],[1,2]]: diagonal 5 - 2 pi + e", real(good.direct[0])});
  r.enclosures.push_back({"X = [[1,1],[1,1]]: off-diagonal 2 - pi", real(bad.direct[1])});
  r.notes.push_back("'>' read entrywise on matrices with positive entries; off-diagonal entries equal "
                    "x_ij (tr X - pi), diagonal entries (x_ii^2 - pi x_ii + e) + x_12 x_21");
  r.notes.push_back(std::to_string(fz.holding) + " of " + std::to_string(fz.samples) + " samples with tr X > pi hold (seed " +
                    std::to_string(o.seed) + "); certificates agree with direct computation: " +
                    yes_no(fz.all_consistent) + ", max gap " + sci(fz.max_certificate_gap));
  r.notes.push_back("trace condition is needed: [[1,1],[1,1]] violates it (" + yes_no(bad.violated) + ")");
}

std::vector<Claim> make_claims() {
  auto claim = [](std::string id, std::string name, std::string statement, std::string anchor,
                  std::optional<VerdictKind> asserted, auto fn) {
    return Claim{std::move(id), std::move(name), std::move(statement), std::move(anchor), 128, asserted, fn};
  };
  std::vector<Claim> c;
  c.push_back(claim("C01", "euler_identity", "|e^(i pi) + 1| = 0, also as f(pi i, 0) = |e^(pi i) + e^0| = 0",
                    "e^(pi i) + 1 = 0", True, euler_identity));
  c.push_back(claim("C02", "new3_inequality", "|e^i - pi| < e", "|e^i - pi| < e", True, new3_inequality));
  c.push_back(claim("C03", "triangle_angle", "B = arccos((1 + pi^2 - e^2) / (2 pi)) < 1 for the triangle with sides 1, e, pi",
                    "triangle figure, B ~ 1 rad", std::nullopt, triangle));
  c.push_back(claim("C04", "new4_identity", "|pi^i - i^pi| = 2 sin(pi^2/4 - ln sqrt(pi))",
                    "|pi^i - i^pi| = 2 sin(pi^2/4 - ln sqrt(pi))", True, new4_identity));
  c.push_back(claim("C05", "new6_grid", "|e^(1-z) + e^conj(z)| > pi on the grid (1/4) Z^2 within [-3, 3]^2",
                    "|e^(1-z) + e^conj(z)| > pi for all complex z", True, new6_grid));
  c.push_back(claim("C06", "new6_reduction", "|e^(1-z) + e^conj(z)| = e^(1-x) + e^x >= 2 sqrt(e) > pi, x = Re z",
                    "|e^(1-z) + e^conj(z)| > pi for all complex z", True, new6_reduction));
  c.push_back(claim("C07", "gauss_identity", "integral of e^(-x^2) over the real line = sqrt(pi)",
                    "integral of e^(-x^2) dx = sqrt(pi)", True, gauss_identity));
  c.push_back(claim("C08", "integral_bound", "integral of e^(-x^2) over [a, b] < (e^e/pi)(e^(-pi a) - e^(-pi b))",
                    "integral of e^(-x^2) over [a, b] < (e^e/pi)(e^(-pi a) - e^(-pi b))", True, integral_bound));
  c.push_back(claim("C09", "disc_negative", "pi^2 < 4e", "pi^2 - 4e < 0", True, disc_negative));
  c.push_back(claim("C10", "circle_square_area", "pi^3 > 4 e^2", "pi^3 > 4 e^2", True, circle_square_area));
  c.push_back(claim("C11", "xi_ix_no_solution", "max over x > 0 of x^(1/x) = e^(1/e) < e^(pi/2), since pi/2 > 1/e",
                    "x^i = i^x, e^(pi/2) = x^(1/x)", True, xi_ix));
  c.push_back(claim("C12", "r_threshold", "x^2 - pi x + (1+1/r)^r = 0 has real roots iff r <= r*, with r* in (4, 5)",
                    "real roots for r sufficiently small", True, r_threshold));
  c.push_back(claim("C13", "liouville_approx", "0 < |L - p/q| < q^-n with q = 10^(n!) for n = 1..5, L = sum 10^(-k!)",
                    "Liouville approximation property", True, liouville_approx));
  c.push_back(claim("C14", "liouville_quadratic",
                    "A x^2 + (A+C) x + C = (Ax + C)(x + 1) has roots -1 and -C/A, A = sum_{k>=0} 10^(-k!), C = sum_{k>=1} 10^(-k!)",
                    "A x^2 + (A+C) x + C = (Ax + C)(x + 1)", True, liouville_quadratic));
  c.push_back(claim("C15", "matrix_euler", "e^(pi J) + I_4 = 0_4 for J in the alpha family", "e^(pi J) + I_4 = 0_4",
                    True, matrix_euler));
  c.push_back(claim("C16", "ybe_family", "R12(x) R23(x+y) R12(y) = R23(y) R12(x+y) R23(x) with R(x) = cos x I + sin x J",
                    "colored Yang-Baxter equation for R(x) = cos x I + sin x J", True, ybe_family));
  c.push_back(claim("C17", "majorana_anticommute", "J^2 = -I and J12 J23 = -J23 J12 for the Majorana matrix",
                    "J12 J23 = -J23 J12", True, majorana));
  c.push_back(claim("C18", "matrix_inequality", "X^2 + e I > pi X entrywise for X with positive entries and tr X > pi",
                    "X^2 + e I_2 > pi X, tr X > pi", True, matrix_inequality));
  return c;
}

}  // namespace

const Registry& Registry::builtin() {
  static const Registry registry = [] {
    Registry r;
    r.claims_ = make_claims();
    return r;
  }();
  return registry;
}

const Claim& Registry::find(std::string_view id) const {
  for (const Claim& c : claims_)
    if (c.id == id || c.name == id) return c;
  throw UnknownClaim(std::string(id));
}

Report Registry::run(std::string_view id, const RunOptions& options) const {
  const Claim& c = find(id);
  const long p = options.precision.value_or(c.default_precision);
  if (p < 24) throw Error("precision must be at least 24 bits");
  Report r;
  r.id = c.id;
  r.name = c.name;
  r.statement = c.statement;
  r.anchor = c.anchor;
  r.asserted = c.asserted;
  r.verdict.precision_used = p;
  const auto start = std::chrono::steady_clock::now();
  c.procedure(r, options, p);
  if (options.timing) {
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

Report run_claim(std::string_view id, long p_start, long p_max) {
  RunOptions o;
  o.precision = p_start;
  o.max_precision = p_max;
  return Registry::builtin().run(id, o);
}

ExpectedTable parse_expected(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("expected-verdict table: ") + e.what());
  }
  if (!j.contains("claims") || !j["claims"].is_object()) throw Error("expected-verdict table: missing \"claims\"");
  ExpectedTable table;
  for (const auto& [id, entry] : j["claims"].items()) {
    const auto kind = parse_verdict_kind(entry.value("verdict", std::string()));
    if (!kind) throw Error("expected-verdict table: bad verdict for " + id);
    table[id] = Expected{*kind, entry.value("note", std::string())};
  }
  return table;
}

const ExpectedTable& builtin_expected() {
  static const ExpectedTable table = parse_expected(detail::kExpectedVerdicts);
  return table;
}

std::string_view builtin_expected_source() { return detail::kExpectedVerdicts; }

}  // namespace transcert::claims
