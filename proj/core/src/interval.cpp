#include "transcert/interval.hpp"

#include <algorithm>
#include <cmath>

#include "transcert/errors.hpp"

namespace transcert {

namespace {

// |x|^n with all intermediate products rounded in direction r.
BigFloat abs_power(const BigFloat& x, unsigned long n, long precision, Round r) {
  BigFloat base = abs(x);
  BigFloat result = BigFloat::from_int(1, precision);
  while (n > 0) {
    if (n & 1UL) result = mul(result, base, precision, r);
    n >>= 1;
    if (n > 0) base = mul(base, base, precision, r);
  }
  return result;
}

}  // namespace

RInterval::RInterval() : lo_(64), hi_(64), precision_(64) {}

RInterval::RInterval(BigFloat lo, BigFloat hi, long precision)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_(precision) {
  if (!lo_.is_finite() || !hi_.is_finite()) throw Error("interval endpoint is not finite");
  if (hi_ < lo_) throw Error("interval with lo > hi");
}

RInterval RInterval::point(const BigFloat& x, long precision) { return RInterval(x, x, precision); }

RInterval RInterval::from_int(long value, long precision) {
  return RInterval(BigFloat::from_int(value, precision, Round::Down), BigFloat::from_int(value, precision, Round::Up),
                   precision);
}

RInterval RInterval::from_decimal(std::string_view text, long precision) {
  return RInterval(BigFloat::from_decimal(text, precision, Round::Down),
                   BigFloat::from_decimal(text, precision, Round::Up), precision);
}

RInterval RInterval::from_rational(const BigRational& q, long precision) {
  return RInterval(BigFloat::from_rational(q, precision, Round::Down), BigFloat::from_rational(q, precision, Round::Up),
                   precision);
}

RInterval RInterval::from_rationals(const BigRational& lo, const BigRational& hi, long precision) {
  return RInterval(BigFloat::from_rational(lo, precision, Round::Down),
                   BigFloat::from_rational(hi, precision, Round::Up), precision);
}

RInterval RInterval::with_precision(long precision) const {
  RInterval out = *this;
  out.precision_ = precision;
  return out;
}

RInterval RInterval::rounded(long precision) const {
  return RInterval(round_to(lo_, precision, Round::Down), round_to(hi_, precision, Round::Up), precision);
}

BigFloat RInterval::width() const { return sub(hi_, lo_, precision_, Round::Up); }

BigFloat RInterval::radius() const { return scale_by_power_of_two(width(), -1); }

BigFloat RInterval::midpoint() const {
  long p = std::max(lo_.precision(), hi_.precision()) + 1;
  return scale_by_power_of_two(add(lo_, hi_, p, Round::Nearest), -1);
}

BigFloat RInterval::mag() const { return max(abs(lo_), abs(hi_)); }

BigFloat RInterval::mig() const {
  if (contains_zero()) return BigFloat(precision_);
  return min(abs(lo_), abs(hi_));
}

bool RInterval::contains(const BigFloat& x) const { return lo_ <= x && x <= hi_; }

bool RInterval::contains(const BigRational& q) const { return lo_.to_rational() <= q && q <= hi_.to_rational(); }

bool RInterval::contains(const RInterval& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }

bool RInterval::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

int RInterval::natural_digits() const {
  return static_cast<int>(std::ceil(static_cast<double>(precision_) * 0.30102999566398120)) + 1;
}

std::string RInterval::to_string(int digits) const {
  return "[" + lo_.to_decimal(digits, Round::Down) + ", " + hi_.to_decimal(digits, Round::Up) + "]";
}

RInterval add(const RInterval& a, const RInterval& b, long precision) {
  return RInterval(add(a.lo(), b.lo(), precision, Round::Down), add(a.hi(), b.hi(), precision, Round::Up), precision);
}

RInterval sub(const RInterval& a, const RInterval& b, long precision) {
  return RInterval(sub(a.lo(), b.hi(), precision, Round::Down), sub(a.hi(), b.lo(), precision, Round::Up), precision);
}

RInterval mul(const RInterval& a, const RInterval& b, long precision) {
  const BigFloat* al = &a.lo();
  const BigFloat* ah = &a.hi();
  const BigFloat* bl = &b.lo();
  const BigFloat* bh = &b.hi();
  BigFloat lo = mul(*al, *bl, precision, Round::Down);
  BigFloat hi = mul(*al, *bl, precision, Round::Up);
  for (auto [x, y] : {std::pair{al, bh}, std::pair{ah, bl}, std::pair{ah, bh}}) {
    BigFloat d = mul(*x, *y, precision, Round::Down);
    BigFloat u = mul(*x, *y, precision, Round::Up);
    if (d < lo) lo = std::move(d);
    if (hi < u) hi = std::move(u);
  }
  return RInterval(std::move(lo), std::move(hi), precision);
}

RInterval div(const RInterval& a, const RInterval& b, long precision) {
  if (b.contains_zero()) throw DivisionByZeroInterval();
  BigFloat lo = div(a.lo(), b.lo(), precision, Round::Down);
  BigFloat hi = div(a.lo(), b.lo(), precision, Round::Up);
  for (auto [x, y] : {std::pair{&a.lo(), &b.hi()}, std::pair{&a.hi(), &b.lo()}, std::pair{&a.hi(), &b.hi()}}) {
    BigFloat d = div(*x, *y, precision, Round::Down);
    BigFloat u = div(*x, *y, precision, Round::Up);
    if (d < lo) lo = std::move(d);
    if (hi < u) hi = std::move(u);
  }
  return RInterval(std::move(lo), std::move(hi), precision);
}

RInterval sqr(const RInterval& a, long precision) { return pow(a, 2, precision); }

RInterval pow(const RInterval& a, unsigned long exponent, long precision) {
  if (exponent == 0) return RInterval::from_int(1, precision);
  if (exponent % 2 == 1) {
    // Odd powers are monotone.
    BigFloat lo = a.lo().sign() >= 0 ? abs_power(a.lo(), exponent, precision, Round::Down)
                                     : neg(abs_power(a.lo(), exponent, precision, Round::Up));
    BigFloat hi = a.hi().sign() >= 0 ? abs_power(a.hi(), exponent, precision, Round::Up)
                                     : neg(abs_power(a.hi(), exponent, precision, Round::Down));
    return RInterval(std::move(lo), std::move(hi), precision);
  }
  return RInterval(abs_power(a.mig(), exponent, precision, Round::Down),
                   abs_power(a.mag(), exponent, precision, Round::Up), precision);
}

RInterval neg(const RInterval& a) { return RInterval(neg(a.hi()), neg(a.lo()), a.precision()); }

RInterval abs(const RInterval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return neg(a);
  return RInterval(BigFloat(a.precision()), a.mag(), a.precision());
}

RInterval scale_by_power_of_two(const RInterval& a, long exponent) {
  return RInterval(scale_by_power_of_two(a.lo(), exponent), scale_by_power_of_two(a.hi(), exponent), a.precision());
}

RInterval hull(const RInterval& a, const RInterval& b) {
  return RInterval(min(a.lo(), b.lo()), max(a.hi(), b.hi()), std::max(a.precision(), b.precision()));
}

RInterval inflate(const RInterval& a, const BigFloat& r) {
  long p = a.precision();
  return RInterval(sub(a.lo(), r, p, Round::Down), add(a.hi(), r, p, Round::Up), p);
}

namespace {
long joint(const RInterval& a, const RInterval& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

RInterval operator+(const RInterval& a, const RInterval& b) { return add(a, b, joint(a, b)); }
RInterval operator-(const RInterval& a, const RInterval& b) { return sub(a, b, joint(a, b)); }
RInterval operator*(const RInterval& a, const RInterval& b) { return mul(a, b, joint(a, b)); }
RInterval operator/(const RInterval& a, const RInterval& b) { return div(a, b, joint(a, b)); }
RInterval operator-(const RInterval& a) { return neg(a); }

RInterval operator+(const RInterval& a, long b) { return a + RInterval::from_int(b, a.precision()); }
RInterval operator+(long a, const RInterval& b) { return b + a; }
RInterval operator-(const RInterval& a, long b) { return a - RInterval::from_int(b, a.precision()); }
RInterval operator-(long a, const RInterval& b) { return RInterval::from_int(a, b.precision()) - b; }
RInterval operator*(long a, const RInterval& b) { return RInterval::from_int(a, b.precision()) * b; }
RInterval operator*(const RInterval& a, long b) { return a * RInterval::from_int(b, a.precision()); }
RInterval operator/(const RInterval& a, long b) { return a / RInterval::from_int(b, a.precision()); }
RInterval operator/(long a, const RInterval& b) { return RInterval::from_int(a, b.precision()) / b; }

Ordering certified_compare(const RInterval& a, const RInterval& b) {
  if (a.hi() < b.lo()) return Ordering::Less;
  if (a.lo() > b.hi()) return Ordering::Greater;
  return Ordering::Overlap;
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return "Less";
    case Ordering::Greater:
      return "Greater";
    case Ordering::Overlap:
      break;
  }
  return "Overlap";
}

}  // namespace transcert
