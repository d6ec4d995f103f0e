#pragma once

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <string>
#include <string_view>

namespace transcert {

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(long num, long den);
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  /// Parses "p", "p/q" or a decimal literal such as "-1.25e-3" exactly.
  static BigRational parse(std::string_view text);
  /// b^e for integer base and exponent (negative exponents give 1/b^|e|).
  static BigRational power(long base, long exponent);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  double to_double() const { return value_.get_d(); }
  /// "p/q" or "p" when the denominator is 1.
  std::string to_string() const;
  /// Decimal expansion truncated toward zero after `digits` fractional digits.
  std::string to_decimal(int digits) const;

  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  /// Throws DivisionByZeroInterval on a zero divisor.
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.value_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

 private:
  mpq_class value_;
};

BigRational abs(const BigRational& q);
BigRational pow(const BigRational& q, unsigned long exponent);

}  // namespace transcert
