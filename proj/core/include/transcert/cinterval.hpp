#pragma once

#include <ostream>
#include <string>

#include "transcert/interval.hpp"

namespace transcert {

/// Axis-aligned complex rectangle re x im.
class CInterval {
 public:
  CInterval() = default;
  CInterval(RInterval re, RInterval im) : re_(std::move(re)), im_(std::move(im)) {}
  /// Real enclosure with an exact zero imaginary part.
  explicit CInterval(const RInterval& re) : re_(re), im_(RInterval::from_int(0, re.precision())) {}

  static CInterval from_ints(long re, long im, long precision);
  static CInterval imaginary_unit(long precision) { return from_ints(0, 1, precision); }

  const RInterval& re() const noexcept { return re_; }
  const RInterval& im() const noexcept { return im_; }
  long precision() const noexcept { return std::max(re_.precision(), im_.precision()); }
  CInterval with_precision(long precision) const;
  CInterval rounded(long precision) const;

  bool contains(const RInterval& re_point, const RInterval& im_point) const;
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  /// Imaginary part is exactly [0, 0].
  bool is_real() const { return im_.is_point() && im_.lo().is_zero(); }
  /// Larger of the two side lengths (rounded up).
  BigFloat max_side() const;

  std::string to_string(int digits) const;
  friend std::ostream& operator<<(std::ostream& os, const CInterval& z) {
    return os << z.to_string(z.re().natural_digits());
  }

 private:
  RInterval re_;
  RInterval im_;
};

CInterval add(const CInterval& a, const CInterval& b, long precision);
CInterval sub(const CInterval& a, const CInterval& b, long precision);
CInterval mul(const CInterval& a, const CInterval& b, long precision);
/// Throws DivisionByZeroInterval when |b|^2 may vanish.
CInterval div(const CInterval& a, const CInterval& b, long precision);

CInterval operator+(const CInterval& a, const CInterval& b);
CInterval operator-(const CInterval& a, const CInterval& b);
CInterval operator*(const CInterval& a, const CInterval& b);
CInterval operator/(const CInterval& a, const CInterval& b);
CInterval operator-(const CInterval& a);

/// Integer power by repeated squaring.
CInterval pow(const CInterval& z, unsigned long exponent);

CInterval cexp(const CInterval& z);
/// Principal logarithm. Throws BranchCutError if z meets {Re <= 0, Im = 0}.
CInterval cln(const CInterval& z);
/// Principal power exp(w * ln z).
CInterval cpow(const CInterval& z, const CInterval& w);
/// [distance from the rectangle to 0, largest corner distance].
RInterval cabs(const CInterval& z);
CInterval conj(const CInterval& z);
/// Principal square root exp(ln(z) / 2); real non-negative inputs use the real sqrt.
CInterval csqrt(const CInterval& z);
CInterval csin(const CInterval& z);
CInterval ccos(const CInterval& z);
/// Principal argument of a rectangle that avoids the branch cut.
RInterval carg(const CInterval& z);

}  // namespace transcert
