#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "transcert/big_float.hpp"
#include "transcert/big_rational.hpp"

namespace transcert {

/// Closed real interval [lo, hi] with arbitrary-precision endpoints.
///
/// Every operation returns an interval that contains the exact image of its
/// inputs. The interval also carries a working precision: binary operators
/// round their results outward to the larger working precision of the two
/// operands, and the named functions take an explicit precision.
class RInterval {
 public:
  RInterval();
  /// Throws Error when lo > hi or either endpoint is NaN.
  RInterval(BigFloat lo, BigFloat hi, long precision);

  static RInterval point(const BigFloat& x, long precision);
  static RInterval from_int(long value, long precision);
  /// Outward conversion of a decimal literal: "0.1" becomes a tight enclosure of 1/10.
  static RInterval from_decimal(std::string_view text, long precision);
  static RInterval from_rational(const BigRational& q, long precision);
  static RInterval from_rationals(const BigRational& lo, const BigRational& hi, long precision);

  const BigFloat& lo() const noexcept { return lo_; }
  const BigFloat& hi() const noexcept { return hi_; }
  long precision() const noexcept { return precision_; }

  /// Same endpoints, different working precision.
  RInterval with_precision(long precision) const;
  /// Endpoints rounded outward to `precision` bits.
  RInterval rounded(long precision) const;

  BigFloat width() const;     // rounded up
  BigFloat radius() const;    // rounded up
  BigFloat midpoint() const;  // nearest
  BigFloat mag() const;       // max |x|
  BigFloat mig() const;       // min |x|

  bool contains(const BigFloat& x) const;
  bool contains(const BigRational& q) const;
  bool contains(const RInterval& inner) const;
  bool contains_zero() const;
  bool is_point() const { return lo_ == hi_; }
  bool is_positive() const { return lo_.sign() > 0; }
  bool is_negative() const { return hi_.sign() < 0; }

  /// "[lo, hi]" with outward-rounded decimal endpoints.
  std::string to_string(int digits) const;
  /// Significant digits that faithfully represent the working precision.
  int natural_digits() const;

  friend std::ostream& operator<<(std::ostream& os, const RInterval& x) {
    return os << x.to_string(x.natural_digits());
  }

 private:
  BigFloat lo_;
  BigFloat hi_;
  long precision_;
};

RInterval add(const RInterval& a, const RInterval& b, long precision);
RInterval sub(const RInterval& a, const RInterval& b, long precision);
RInterval mul(const RInterval& a, const RInterval& b, long precision);
/// Throws DivisionByZeroInterval when b contains 0.
RInterval div(const RInterval& a, const RInterval& b, long precision);
RInterval sqr(const RInterval& a, long precision);
RInterval pow(const RInterval& a, unsigned long exponent, long precision);

RInterval neg(const RInterval& a);
RInterval abs(const RInterval& a);
RInterval scale_by_power_of_two(const RInterval& a, long exponent);
RInterval hull(const RInterval& a, const RInterval& b);
/// Symmetric enlargement [lo - r, hi + r] for r >= 0.
RInterval inflate(const RInterval& a, const BigFloat& r);

RInterval operator+(const RInterval& a, const RInterval& b);
RInterval operator-(const RInterval& a, const RInterval& b);
RInterval operator*(const RInterval& a, const RInterval& b);
RInterval operator/(const RInterval& a, const RInterval& b);
RInterval operator-(const RInterval& a);

RInterval operator+(const RInterval& a, long b);
RInterval operator+(long a, const RInterval& b);
RInterval operator-(const RInterval& a, long b);
RInterval operator-(long a, const RInterval& b);
RInterval operator*(long a, const RInterval& b);
RInterval operator*(const RInterval& a, long b);
RInterval operator/(const RInterval& a, long b);
RInterval operator/(long a, const RInterval& b);

enum class Ordering { Less, Greater, Overlap };

/// Less iff a.hi < b.lo, Greater iff a.lo > b.hi, Overlap otherwise.
Ordering certified_compare(const RInterval& a, const RInterval& b);

const char* to_string(Ordering o);

}  // namespace transcert
