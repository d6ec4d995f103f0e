#include "transcert/cinterval.hpp"

#include <algorithm>

#include "transcert/elementary.hpp"
#include "transcert/errors.hpp"

namespace transcert {

CInterval CInterval::from_ints(long re, long im, long precision) {
  return {RInterval::from_int(re, precision), RInterval::from_int(im, precision)};
}

CInterval CInterval::with_precision(long precision) const {
  return {re_.with_precision(precision), im_.with_precision(precision)};
}

CInterval CInterval::rounded(long precision) const { return {re_.rounded(precision), im_.rounded(precision)}; }

bool CInterval::contains(const RInterval& re_point, const RInterval& im_point) const {
  return re_.contains(re_point) && im_.contains(im_point);
}

BigFloat CInterval::max_side() const { return max(re_.width(), im_.width()); }

std::string CInterval::to_string(int digits) const {
  return re_.to_string(digits) + " + i" + im_.to_string(digits);
}

CInterval add(const CInterval& a, const CInterval& b, long precision) {
  return {add(a.re(), b.re(), precision), add(a.im(), b.im(), precision)};
}

CInterval sub(const CInterval& a, const CInterval& b, long precision) {
  return {sub(a.re(), b.re(), precision), sub(a.im(), b.im(), precision)};
}

CInterval mul(const CInterval& a, const CInterval& b, long precision) {
  if (a.is_real() && b.is_real()) return CInterval(mul(a.re(), b.re(), precision));
  return {sub(mul(a.re(), b.re(), precision), mul(a.im(), b.im(), precision), precision),
          add(mul(a.re(), b.im(), precision), mul(a.im(), b.re(), precision), precision)};
}

CInterval div(const CInterval& a, const CInterval& b, long precision) {
  if (b.is_real()) {
    return {div(a.re(), b.re(), precision), div(a.im(), b.re(), precision)};
  }
  const RInterval denom = add(sqr(b.re(), precision), sqr(b.im(), precision), precision);
  if (denom.contains_zero()) throw DivisionByZeroInterval();
  // (a.re + i a.im)(b.re - i b.im) / |b|^2
  const RInterval re = add(mul(a.re(), b.re(), precision), mul(a.im(), b.im(), precision), precision);
  const RInterval im = sub(mul(a.im(), b.re(), precision), mul(a.re(), b.im(), precision), precision);
  return {div(re, denom, precision), div(im, denom, precision)};
}

CInterval operator+(const CInterval& a, const CInterval& b) {
  return add(a, b, std::max(a.precision(), b.precision()));
}
CInterval operator-(const CInterval& a, const CInterval& b) {
  return sub(a, b, std::max(a.precision(), b.precision()));
}
CInterval operator*(const CInterval& a, const CInterval& b) {
  return mul(a, b, std::max(a.precision(), b.precision()));
}
CInterval operator/(const CInterval& a, const CInterval& b) {
  return div(a, b, std::max(a.precision(), b.precision()));
}
CInterval operator-(const CInterval& a) { return {neg(a.re()), neg(a.im())}; }

CInterval pow(const CInterval& z, unsigned long exponent) {
  const long p = z.precision();
  if (z.is_real()) return CInterval(pow(z.re(), exponent, p));
  CInterval result = CInterval::from_ints(1, 0, p);
  CInterval base = z;
  while (exponent > 0) {
    if (exponent & 1UL) result = mul(result, base, p);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base, p);
  }
  return result;
}

CInterval cexp(const CInterval& z) {
  const RInterval modulus = exp(z.re());
  if (z.is_real()) return CInterval(modulus);
  const long p = z.precision();
  return {mul(modulus, cos(z.im()), p), mul(modulus, sin(z.im()), p)};
}

namespace {

// Arg of a single exact point (x, y) not on the cut.
RInterval point_arg(const BigFloat& x, const BigFloat& y, long w) {
  const RInterval xi = RInterval::point(x, w);
  const RInterval yi = RInterval::point(y, w);
  if (x.sign() > 0) return atan(div(yi, xi, w));
  const RInterval half_pi = scale_by_power_of_two(const_pi(w), -1);
  // x <= 0 and y != 0: rotate by a quarter turn.
  if (y.sign() > 0) return sub(half_pi, atan(div(xi, yi, w)), w);
  return sub(neg(half_pi), atan(div(xi, yi, w)), w);
}

}  // namespace

RInterval carg(const CInterval& z) {
  if (z.re().lo().sign() <= 0 && z.im().contains_zero())
    throw BranchCutError("BranchCutError: rectangle meets the cut {Re <= 0, Im = 0}");
  const long p = z.precision();
  const long w = p + kGuardBits;
  // Arg is continuous off the cut, and over a convex region avoiding the origin
  // its extremes sit at the corners.
  RInterval out = point_arg(z.re().lo(), z.im().lo(), w);
  for (const BigFloat* x : {&z.re().lo(), &z.re().hi()}) {
    for (const BigFloat* y : {&z.im().lo(), &z.im().hi()}) out = hull(out, point_arg(*x, *y, w));
  }
  return out.rounded(p);
}

CInterval cln(const CInterval& z) {
  if (z.re().lo().sign() <= 0 && z.im().contains_zero())
    throw BranchCutError("BranchCutError: rectangle meets the cut {Re <= 0, Im = 0}");
  if (z.is_real()) return CInterval(ln(z.re()));
  return {ln(cabs(z)), carg(z)};
}

CInterval cpow(const CInterval& z, const CInterval& w) { return cexp(cln(z) * w); }

RInterval cabs(const CInterval& z) {
  const long p = z.precision();
  const BigFloat& mig_re = z.re().mig();
  const BigFloat& mig_im = z.im().mig();
  const BigFloat& mag_re = z.re().mag();
  const BigFloat& mag_im = z.im().mag();
  BigFloat lo = sqrt(add(mul(mig_re, mig_re, p, Round::Down), mul(mig_im, mig_im, p, Round::Down), p, Round::Down),
                     p, Round::Down);
  BigFloat hi = sqrt(add(mul(mag_re, mag_re, p, Round::Up), mul(mag_im, mag_im, p, Round::Up), p, Round::Up), p,
                     Round::Up);
  return RInterval(std::move(lo), std::move(hi), p);
}

CInterval conj(const CInterval& z) { return {z.re(), neg(z.im())}; }

CInterval csqrt(const CInterval& z) {
  if (z.is_real() && z.re().lo().sign() >= 0) return CInterval(sqrt(z.re()));
  const CInterval l = cln(z);
  return cexp({scale_by_power_of_two(l.re(), -1), scale_by_power_of_two(l.im(), -1)});
}

CInterval csin(const CInterval& z) {
  if (z.is_real()) return CInterval(sin(z.re()));
  const long p = z.precision();
  // sin(x + iy) = sin x cosh y + i cos x sinh y
  return {mul(sin(z.re()), cosh(z.im()), p), mul(cos(z.re()), sinh(z.im()), p)};
}

CInterval ccos(const CInterval& z) {
  if (z.is_real()) return CInterval(cos(z.re()));
  const long p = z.precision();
  // cos(x + iy) = cos x cosh y - i sin x sinh y
  return {mul(cos(z.re()), cosh(z.im()), p), neg(mul(sin(z.re()), sinh(z.im()), p))};
}

}  // namespace transcert
