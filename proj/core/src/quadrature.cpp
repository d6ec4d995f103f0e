#include "transcert/quadrature.hpp"

#include "transcert/elementary.hpp"
#include "transcert/errors.hpp"

namespace transcert::quad {

namespace {

// Derivative bounds only need to be valid, not tight to the last bit.
constexpr long kBoundPrecision = 64;

}  // namespace

IntegrandSpec gaussian() {
  IntegrandSpec spec;
  spec.value = [](const RInterval& x) { return exp(neg(sqr(x, x.precision()))); };
  spec.fourth_derivative = [](const RInterval& x) {
    const long p = x.precision();
    const RInterval t = sqr(x, p);
    // 16t^2 - 48t + 12 = 16 (t - 3/2)^2 - 24 keeps a single occurrence of t.
    const RInterval shifted = sub(t, RInterval::from_rational(BigRational(3, 2), p), p);
    const RInterval poly = sub(mul(RInterval::from_int(16, p), sqr(shifted, p), p), RInterval::from_int(24, p), p);
    return mul(poly, exp(neg(t)), p);
  };
  return spec;
}

RInterval verified_simpson(const IntegrandSpec& f, const BigRational& a, const BigRational& b, unsigned n,
                           long precision) {
  if (!(a < b)) throw Error("verified_simpson: need a < b");
  if (n < 2 || n % 2 != 0) throw Error("verified_simpson: n must be even and >= 2");

  const long w = precision + kGuardBits;
  const BigRational h = (b - a) / BigRational(static_cast<long>(n));
  auto node = [&](unsigned j) { return RInterval::from_rational(a + h * BigRational(static_cast<long>(j)), w); };

  RInterval ends = add(f.value(node(0)), f.value(node(n)), w);
  RInterval odd = RInterval::from_int(0, w);
  RInterval even = RInterval::from_int(0, w);
  BigFloat derivative_mass(kBoundPrecision);  // sum over panels of sup|f''''|
  RInterval left = node(0);
  for (unsigned j = 1; j < n; ++j) {
    const RInterval x = node(j);
    if (j % 2 == 1) {
      odd = add(odd, f.value(x), w);
    } else {
      even = add(even, f.value(x), w);
    }
  }
  for (unsigned k = 0; k < n / 2; ++k) {
    const RInterval right = node(2 * k + 2);
    const RInterval panel(left.lo(), right.hi(), kBoundPrecision);
    derivative_mass = add(derivative_mass, f.fourth_derivative(panel).mag(), kBoundPrecision, Round::Up);
    left = right;
  }

  const RInterval hi = RInterval::from_rational(h, w);
  RInterval estimate = add(ends, add(mul(RInterval::from_int(4, w), odd, w), mul(RInterval::from_int(2, w), even, w), w), w);
  estimate = div(mul(estimate, hi, w), RInterval::from_int(3, w), w);

  // Each panel of width 2h contributes at most (2h) h^4 / 180 * sup|f''''| = h^5/90 * sup|f''''|.
  const RInterval h5 = pow(RInterval::from_rational(h, kBoundPrecision), 5, kBoundPrecision);
  const BigFloat radius = div(mul(h5.hi(), derivative_mass, kBoundPrecision, Round::Up),
                              BigFloat::from_int(90), kBoundPrecision, Round::Up);
  return inflate(estimate, radius).rounded(precision);
}

RInterval gauss_tail(const BigRational& t, long precision) {
  if (t.sign() <= 0) throw Error("gauss_tail: need T > 0");
  const long w = precision + kGuardBits;
  const RInterval ti = RInterval::from_rational(t, w);
  const RInterval bound = div(exp(neg(sqr(ti, w))), scale_by_power_of_two(ti, 1), w);
  return RInterval(BigFloat(precision), round_to(bound.hi(), precision, Round::Up), precision);
}

Verdict claim_gauss_identity(const BigRational& t, unsigned n, long precision) {
  if (t < BigRational(2)) throw Error("claim_gauss_identity: need T >= 2");
  const long w = precision + kGuardBits;
  const RInterval core = verified_simpson(gaussian(), -t, t, n, w);
  const RInterval tails = scale_by_power_of_two(gauss_tail(t, w), 1);
  const RInterval total = add(core, tails, w);
  const RInterval root_pi = sqrt(const_pi(w));
  const RInterval diff = sub(total, root_pi, w);

  Verdict v;
  v.lhs = CInterval(total.rounded(precision));
  v.rhs = CInterval(root_pi.rounded(precision));
  v.precision_used = precision;
  if (diff.contains_zero()) {
    v.kind = VerdictKind::ConsistentWithin;
    v.within = round_to(diff.width(), 64, Round::Up);
  } else {
    v.kind = VerdictKind::CertifiedFalse;
  }
  return v;
}

IntegralBound claim_integral_bound(const BigRational& a, const BigRational& b, unsigned n, long precision) {
  if (!(a < b)) throw Error("claim_integral_bound: need a < b");
  const long w = precision + kGuardBits;
  const RInterval lhs = verified_simpson(gaussian(), a, b, n, w);
  const RInterval pi = const_pi(w);
  const RInterval e = const_e(w);
  const RInterval scale = div(exp(e), pi, w);
  const RInterval rhs = mul(scale,
                            sub(exp(neg(mul(pi, RInterval::from_rational(a, w), w))),
                                exp(neg(mul(pi, RInterval::from_rational(b, w), w))), w),
                            w);

  IntegralBound out;
  out.verdict.lhs = CInterval(lhs.rounded(precision));
  out.verdict.rhs = CInterval(rhs.rounded(precision));
  out.verdict.precision_used = precision;
  if (lhs.hi() < rhs.lo()) {
    out.verdict.kind = VerdictKind::CertifiedTrue;
  } else if (lhs.lo() >= rhs.hi()) {
    out.verdict.kind = VerdictKind::CertifiedFalse;
  }

  const RInterval disc = sub(sqr(pi, w), mul(RInterval::from_int(4, w), e, w), w);
  out.discriminant.lhs = CInterval(disc.rounded(precision));
  out.discriminant.rhs = CInterval(RInterval::from_int(0, precision));
  out.discriminant.precision_used = precision;
  out.discriminant.kind = disc.is_negative() ? VerdictKind::CertifiedTrue
                          : disc.lo().sign() >= 0 ? VerdictKind::CertifiedFalse
                                                  : VerdictKind::Undecided;
  return out;
}

}  // namespace transcert::quad
