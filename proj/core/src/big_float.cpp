#include "transcert/big_float.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <memory>

#include "transcert/errors.hpp"

namespace transcert {

namespace {

long clamp_precision(long p) { return std::max<long>(p, MPFR_PREC_MIN); }

struct MpfrStringDeleter {
  void operator()(char* s) const { mpfr_free_str(s); }
};

}  // namespace

mpfr_rnd_t to_mpfr(Round r) noexcept {
  switch (r) {
    case Round::Down:
      return MPFR_RNDD;
    case Round::Up:
      return MPFR_RNDU;
    case Round::Nearest:
      break;
  }
  return MPFR_RNDN;
}

BigFloat::BigFloat(long precision) {
  mpfr_init2(value_, clamp_precision(precision));
  mpfr_set_zero(value_, 1);
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_set_zero(value_, 1);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat BigFloat::from_int(long value, long precision, Round r) {
  BigFloat x(precision);
  mpfr_set_si(x.value_, value, to_mpfr(r));
  return x;
}

BigFloat BigFloat::from_mpz(const mpz_class& value, long precision, Round r) {
  BigFloat x(precision);
  mpfr_set_z(x.value_, value.get_mpz_t(), to_mpfr(r));
  return x;
}

BigFloat BigFloat::from_double(double value, long precision) {
  BigFloat x(precision);
  mpfr_set_d(x.value_, value, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::from_decimal(std::string_view text, long precision, Round r) {
  BigFloat x(precision);
  std::string owned(text);
  char* end = nullptr;
  mpfr_strtofr(x.value_, owned.c_str(), &end, 10, to_mpfr(r));
  if (owned.empty() || end != owned.c_str() + owned.size() || !mpfr_number_p(x.value_))
    throw Error("invalid decimal literal '" + owned + "'");
  return x;
}

BigFloat BigFloat::from_rational(const BigRational& q, long precision, Round r) {
  BigFloat x(precision);
  mpfr_set_q(x.value_, q.raw().get_mpq_t(), to_mpfr(r));
  return x;
}

BigFloat BigFloat::power_of_two(long exponent, long precision) {
  BigFloat x(precision);
  mpfr_set_ui_2exp(x.value_, 1, exponent, MPFR_RNDN);
  return x;
}

long BigFloat::precision() const noexcept { return static_cast<long>(mpfr_get_prec(value_)); }

int BigFloat::sign() const noexcept { return mpfr_sgn(value_); }

bool BigFloat::is_finite() const noexcept { return mpfr_number_p(value_) != 0; }

long BigFloat::exponent() const noexcept {
  if (mpfr_zero_p(value_) || !mpfr_number_p(value_)) return LONG_MIN / 4;
  return static_cast<long>(mpfr_get_exp(value_));
}

double BigFloat::to_double(Round r) const { return mpfr_get_d(value_, to_mpfr(r)); }

BigRational BigFloat::to_rational() const {
  if (!is_finite()) throw Error("non-finite BigFloat has no rational value");
  mpz_class mantissa;
  mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  if (e >= 0) {
    mpz_class scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), mantissa.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return BigRational(scaled, mpz_class(1));
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(-e));
  return BigRational(mantissa, den);
}

mpz_class BigFloat::floor_integer() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDD);
  return z;
}

mpz_class BigFloat::ceil_integer() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDU);
  return z;
}

std::string BigFloat::to_decimal(int digits, Round r) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";

  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, MpfrStringDeleter> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(std::max(digits, 2)), value_, to_mpfr(r)));
  std::string body(raw.get());
  std::string sign_part;
  if (body.front() == '-') {
    sign_part = "-";
    body.erase(0, 1);
  }
  // value = 0.body * 10^exp10
  while (body.size() > 1 && body.back() == '0') body.pop_back();
  const long e = static_cast<long>(exp10);
  std::string out;
  if (e > 0 && e <= 21) {
    if (static_cast<long>(body.size()) <= e) {
      out = body + std::string(static_cast<std::size_t>(e) - body.size(), '0');
    } else {
      out = body.substr(0, static_cast<std::size_t>(e)) + "." + body.substr(static_cast<std::size_t>(e));
    }
  } else if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + body;
  } else {
    out = body.substr(0, 1);
    if (body.size() > 1) out += "." + body.substr(1);
    out += "e" + std::to_string(e - 1);
  }
  return sign_part + out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat add(const BigFloat& a, const BigFloat& b, long precision, Round r) {
  BigFloat out(precision);
  mpfr_add(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

BigFloat sub(const BigFloat& a, const BigFloat& b, long precision, Round r) {
  BigFloat out(precision);
  mpfr_sub(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

BigFloat mul(const BigFloat& a, const BigFloat& b, long precision, Round r) {
  BigFloat out(precision);
  mpfr_mul(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

BigFloat div(const BigFloat& a, const BigFloat& b, long precision, Round r) {
  if (b.is_zero()) throw DivisionByZeroInterval();
  BigFloat out(precision);
  mpfr_div(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

BigFloat sqrt(const BigFloat& a, long precision, Round r) {
  if (a.sign() < 0) throw DomainError("DomainError: sqrt of a negative number");
  BigFloat out(precision);
  mpfr_sqrt(out.get(), a.get(), to_mpfr(r));
  return out;
}

BigFloat round_to(const BigFloat& a, long precision, Round r) {
  BigFloat out(precision);
  mpfr_set(out.get(), a.get(), to_mpfr(r));
  return out;
}

BigFloat neg(const BigFloat& a) {
  BigFloat out(a.precision());
  mpfr_neg(out.get(), a.get(), MPFR_RNDN);
  return out;
}

BigFloat abs(const BigFloat& a) {
  BigFloat out(a.precision());
  mpfr_abs(out.get(), a.get(), MPFR_RNDN);
  return out;
}

BigFloat scale_by_power_of_two(const BigFloat& a, long exponent) {
  BigFloat out(a.precision());
  mpfr_mul_2si(out.get(), a.get(), exponent, MPFR_RNDN);
  return out;
}

const BigFloat& min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }
const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

}  // namespace transcert
