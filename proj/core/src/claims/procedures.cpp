#include "transcert/claims/procedures.hpp"

#include <cmath>

#include "transcert/elementary.hpp"
#include "transcert/errors.hpp"
#include "transcert/expr/evaluator.hpp"

namespace transcert::claims {

namespace {

bool overlaps(const RInterval& a, const RInterval& b) { return a.lo() <= b.hi() && b.lo() <= a.hi(); }

std::string complex_expr(const BigRational& x, const BigRational& y) {
  return "(" + rational_expr(x) + " + " + rational_expr(y) + "*i)";
}

// |e^(1-z) + e^conj(z)| at z = x + iy.
RInterval new6_modulus(const BigRational& x, const BigRational& y, long precision) {
  const std::string z = complex_expr(x, y);
  return expr::eval(unified_f("1 - " + z, "conj" + z), precision).re();
}

// e^(1-x) + e^x
RInterval new6_reduced(const BigRational& x, long precision) {
  const std::string s = rational_expr(x);
  return expr::eval("exp(1 - " + s + ") + exp(" + s + ")", precision).re();
}

Verdict real_verdict(VerdictKind kind, const RInterval& lhs, const RInterval& rhs, long precision) {
  Verdict v;
  v.kind = kind;
  v.lhs = CInterval(lhs);
  v.rhs = CInterval(rhs);
  v.precision_used = precision;
  return v;
}

}  // namespace

std::string unified_f(const std::string& z, const std::string& w) { return "abs(exp(" + z + ") + exp(" + w + "))"; }

std::string rational_expr(const BigRational& q) {
  const std::string s = q.denominator() == 1 ? q.numerator().get_str()
                                              : q.numerator().get_str() + "/" + q.denominator().get_str();
  return "(" + s + ")";
}

GridResult claim_new6_grid(const BigRational& step, const BigRational& half_width, long precision, long max_precision) {
  if (step.sign() <= 0) throw Error("claim_new6_grid: step must be positive");
  GridResult out;
  bool refuted = false;
  long used = precision;
  std::optional<RInterval> lowest;
  for (BigRational x = -half_width; x <= half_width; x += step) {
    for (BigRational y = -half_width; y <= half_width; y += step) {
      ++out.points;
      for (long p = precision;; p *= 2) {
        const RInterval pi = const_pi(p).rounded(p);
        const RInterval m = new6_modulus(x, y, p);
        const Ordering o = certified_compare(m, pi);
        if (o != Ordering::Overlap || 2 * p > max_precision) {
          used = std::max(used, p);
          if (o == Ordering::Greater) ++out.certified;
          if (o == Ordering::Less || (o == Ordering::Overlap && m.hi() <= pi.lo())) refuted = true;
          if (!lowest || m.lo() < lowest->lo()) {
            lowest = m.rounded(precision);
            out.min_x = x;
            out.min_y = y;
          }
          break;
        }
      }
    }
  }
  out.min_modulus = *lowest;
  const VerdictKind kind = out.certified == out.points ? VerdictKind::CertifiedTrue
                           : refuted                   ? VerdictKind::CertifiedFalse
                                                       : VerdictKind::Undecided;
  out.verdict = real_verdict(kind, out.min_modulus, const_pi(precision).rounded(precision), used);
  return out;
}

ReductionResult claim_new6_reduction(long precision) {
  ReductionResult out;
  const long p = precision;
  out.margin = expr::eval("2*sqrt(e) - pi", p).re();

  out.identity_lhs = new6_modulus(BigRational(2), BigRational(-3), p);
  out.identity_rhs = expr::eval("exp(-1) + exp(2)", p).re();
  out.identity_ok = overlaps(out.identity_lhs, out.identity_rhs);

  out.independence_ok = true;
  for (const BigRational& x : {BigRational(-2), BigRational(-1), BigRational(0), BigRational(1, 2), BigRational(1),
                               BigRational(2)}) {
    const RInterval reduced = new6_reduced(x, p);
    for (long y : {-7L, -3L, -1L, 0L, 1L, 3L, 7L}) {
      const RInterval m = new6_modulus(x, BigRational(y), p);
      out.independence_ok = out.independence_ok && overlaps(m, reduced);
      out.max_deviation =
          std::max(out.max_deviation, std::abs(m.midpoint().to_double() - reduced.midpoint().to_double()));
    }
  }

  const RInterval at_half = new6_reduced(BigRational(1, 2), p);
  out.stationary_ok = certified_compare(new6_reduced(BigRational(2, 5), p), at_half) == Ordering::Greater &&
                      certified_compare(new6_reduced(BigRational(3, 5), p), at_half) == Ordering::Greater;

  const RInterval two_sqrt_e = expr::eval("2*sqrt(e)", p).re();
  const RInterval pi = const_pi(p).rounded(p);
  VerdictKind kind = VerdictKind::Undecided;
  if (out.margin.is_positive() && out.identity_ok && out.independence_ok) {
    kind = VerdictKind::CertifiedTrue;
  } else if (out.margin.is_negative()) {
    kind = VerdictKind::CertifiedFalse;
  }
  out.verdict = real_verdict(kind, two_sqrt_e, pi, p);
  return out;
}

XiIxResult claim_xi_ix(long precision, long max_precision) {
  XiIxResult out;
  const expr::CertifyOptions opts{precision, max_precision, std::nullopt};
  out.half_pi_vs_inv_e = expr::certify("pi/2 > 1/e", opts);
  out.peak_vs_target = expr::certify("exp(1/e) < exp(pi/2)", opts);
  const long p = precision;
  out.peak = expr::eval("exp(1/e)", p).re();
  out.target = expr::eval("exp(pi/2)", p).re();

  // x^(1/x) = exp(ln(x)/x) on a logarithmic grid over [0.01, 100], plus x = e.
  constexpr int kSteps = 400;
  out.samples_below_peak = true;
  double best = -1.0;
  for (int k = 0; k <= kSteps; ++k) {
    const double xd = 0.01 * std::pow(10.0, 4.0 * k / kSteps);
    const RInterval x = RInterval::point(BigFloat::from_double(xd), p);
    const RInterval v = exp(div(ln(x), x, p));
    out.samples_below_peak = out.samples_below_peak && v.hi() < out.peak.lo();
    const double mid = v.midpoint().to_double();
    if (mid > best) {
      best = mid;
      out.sampled_argmax = xd;
    }
  }
  const RInterval e = const_e(p).rounded(p);
  const RInterval at_e = exp(div(ln(e), e, p));
  out.samples_below_peak = out.samples_below_peak && overlaps(at_e, out.peak);
  if (at_e.midpoint().to_double() >= best) out.sampled_argmax = e.midpoint().to_double();
  out.samples = kSteps + 2;

  const bool both = out.half_pi_vs_inv_e.kind == VerdictKind::CertifiedTrue &&
                    out.peak_vs_target.kind == VerdictKind::CertifiedTrue;
  const bool either_false = out.half_pi_vs_inv_e.kind == VerdictKind::CertifiedFalse ||
                            out.peak_vs_target.kind == VerdictKind::CertifiedFalse;
  out.verdict = out.peak_vs_target;
  out.verdict.kind = both ? VerdictKind::CertifiedTrue : either_false ? VerdictKind::CertifiedFalse : VerdictKind::Undecided;
  out.verdict.precision_used = std::max(out.half_pi_vs_inv_e.precision_used, out.peak_vs_target.precision_used);
  return out;
}

RThreshold claim_r_threshold(const BigRational& tol, long precision) {
  if (tol.sign() <= 0) throw Error("claim_r_threshold: tol must be positive");
  RThreshold out;
  auto quarter_pi_sq = [](long p) { return div(sqr(const_pi(p), p), RInterval::from_int(4, p), p); };
  auto g = [&](const BigRational& r, long p) {
    const long w = p + kGuardBits;
    const RInterval base = RInterval::from_rational(BigRational(1) + BigRational(1) / r, w);
    return sub(exp(mul(RInterval::from_rational(r, w), ln(base), w)), quarter_pi_sq(w), w);
  };

  out.quarter_pi_squared = quarter_pi_sq(precision).rounded(precision);
  out.at_four = pow(BigRational(5, 4), 4);
  out.at_five = pow(BigRational(6, 5), 5);
  const RInterval q = quarter_pi_sq(precision + kGuardBits);
  out.bracket_ok = RInterval::from_rational(out.at_four, precision + kGuardBits).hi() < q.lo() &&
                   RInterval::from_rational(out.at_five, precision + kGuardBits).lo() > q.hi();

  BigRational lo(4), hi(5);
  long p = precision;
  bool stuck = false;
  while (out.bracket_ok && hi - lo > tol) {
    const BigRational mid = (lo + hi) / BigRational(2);
    const RInterval gm = g(mid, p);
    if (gm.is_negative()) {
      lo = mid;
    } else if (gm.is_positive()) {
      hi = mid;
    } else if (p < 8 * precision) {
      p *= 2;
      continue;
    } else {
      stuck = true;
      break;
    }
    ++out.iterations;
  }
  out.r_star = RInterval::from_rationals(lo, hi, precision);
  const VerdictKind kind =
      out.bracket_ok && !stuck && hi - lo <= tol ? VerdictKind::CertifiedTrue : VerdictKind::Undecided;
  out.verdict.kind = kind;
  out.verdict.lhs = CInterval(out.r_star);
  out.verdict.precision_used = p;
  return out;
}

RInterval triangle_angle(const RInterval& x, const RInterval& y, const RInterval& opposite, long precision) {
  const long w = precision + kGuardBits;
  const RInterval num = sub(add(sqr(x, w), sqr(y, w), w), sqr(opposite, w), w);
  const RInterval c = div(num, scale_by_power_of_two(mul(x, y, w), 1), w);
  return acos(c).rounded(precision);
}

Report claim_triangle_angle(long precision) {
  const long p = precision;
  const long w = p + kGuardBits;
  Report r;
  const RInterval one = RInterval::from_int(1, w);
  const RInterval b = triangle_angle(one, const_pi(w), const_e(w), p);
  const RInterval third_side = expr::eval("abs(exp(i) - pi)", p).re();
  const RInterval equilateral = triangle_angle(one, one, one, p);
  const RInterval pi_third = div(const_pi(w), RInterval::from_int(3, w), w).rounded(p);

  const Ordering o = certified_compare(b, RInterval::from_int(1, p));
  const VerdictKind kind = o == Ordering::Less ? VerdictKind::CertifiedTrue
                           : o == Ordering::Greater ? VerdictKind::CertifiedFalse
                                                    : VerdictKind::Undecided;
  r.verdict = real_verdict(kind, b, RInterval::from_int(1, p), p);
  r.enclosures.push_back({"B", CInterval(b)});
  r.enclosures.push_back({"third side for a 1 rad angle, |e^i - pi|", CInterval(third_side)});
  r.enclosures.push_back({"equilateral angle", CInterval(equilateral)});
  r.notes.push_back("B is the angle between the sides of length 1 and pi; the side opposite it has length e.");
  r.notes.push_back("The source reads the figure as B ~ 1 rad. B < 1 holds exactly when |e^i - pi| > e, so this "
                    "verdict must agree with the refutation of |e^i - pi| < e.");
  r.notes.push_back(overlaps(equilateral, pi_third) ? "sanity: the (1, 1, 1) triangle gives pi/3"
                                                    : "sanity FAILED: the (1, 1, 1) triangle does not give pi/3");
  return r;
}

}  // namespace transcert::claims
