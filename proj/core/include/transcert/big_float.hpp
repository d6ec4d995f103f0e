#pragma once

#include <compare>
#include <gmpxx.h>
#include <mpfr.h>
#include <ostream>
#include <string>
#include <string_view>

#include "transcert/big_rational.hpp"

namespace transcert {

/// Rounding direction of a single arithmetic result.
enum class Round { Down, Up, Nearest };

/// Binary floating-point number with an arbitrary-length mantissa.
///
/// A thin value type over an MPFR number. Every arithmetic operation takes its
/// own output precision and rounding direction, so interval code can round the
/// lower endpoint toward -inf and the upper toward +inf.
class BigFloat {
 public:
  BigFloat() : BigFloat(64) {}
  explicit BigFloat(long precision);
  ~BigFloat();

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;

  static BigFloat from_int(long value, long precision = 64, Round r = Round::Nearest);
  static BigFloat from_mpz(const mpz_class& value, long precision, Round r);
  /// Exact whenever precision >= 53.
  static BigFloat from_double(double value, long precision = 53);
  /// Correctly rounded conversion of a decimal literal.
  static BigFloat from_decimal(std::string_view text, long precision, Round r);
  static BigFloat from_rational(const BigRational& q, long precision, Round r);
  /// Exactly 2^exponent.
  static BigFloat power_of_two(long exponent, long precision = 2);

  long precision() const noexcept;
  int sign() const noexcept;
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_finite() const noexcept;
  /// Binary exponent e with |x| = m * 2^e, m in [1/2, 1). Zero reports a very negative value.
  long exponent() const noexcept;

  double to_double(Round r = Round::Nearest) const;
  BigRational to_rational() const;
  /// Floor / ceiling as an exact integer. Requires a finite value.
  mpz_class floor_integer() const;
  mpz_class ceil_integer() const;
  /// Decimal rendering with `digits` significant digits, rounded in direction r.
  std::string to_decimal(int digits, Round r) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
    return os << x.to_decimal(20, Round::Nearest);
  }

 private:
  mpfr_t value_;
};

mpfr_rnd_t to_mpfr(Round r) noexcept;

BigFloat add(const BigFloat& a, const BigFloat& b, long precision, Round r);
BigFloat sub(const BigFloat& a, const BigFloat& b, long precision, Round r);
BigFloat mul(const BigFloat& a, const BigFloat& b, long precision, Round r);
BigFloat div(const BigFloat& a, const BigFloat& b, long precision, Round r);
BigFloat sqrt(const BigFloat& a, long precision, Round r);
/// Rounds to a (usually smaller) precision.
BigFloat round_to(const BigFloat& a, long precision, Round r);

// Exact operations: the result keeps a's precision.
BigFloat neg(const BigFloat& a);
BigFloat abs(const BigFloat& a);
BigFloat scale_by_power_of_two(const BigFloat& a, long exponent);

const BigFloat& min(const BigFloat& a, const BigFloat& b);
const BigFloat& max(const BigFloat& a, const BigFloat& b);

}  // namespace transcert
