#include "transcert/big_rational.hpp"

#include <cctype>

#include "transcert/errors.hpp"

namespace transcert {

BigRational::BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZeroInterval();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational BigRational::power(long base, long exponent) {
  mpz_class b(base);
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) return BigRational(mpz_class(1), p);
  return BigRational(p, mpz_class(1));
}

BigRational BigRational::parse(std::string_view text) {
  auto fail = [&] { return Error("invalid rational literal '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num, den;
    if (num.set_str(std::string(text.substr(0, slash)), 10) != 0) throw fail();
    if (den.set_str(std::string(text.substr(slash + 1)), 10) != 0) throw fail();
    return BigRational(num, den);
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw fail();
  long exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw fail();
    ++pos;
    std::string exp_text(text.substr(pos));
    if (exp_text.empty()) throw fail();
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != exp_text.size()) throw fail();
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  return BigRational(mantissa, mpz_class(1)) * power(10, exponent - frac_digits);
}

std::string BigRational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string BigRational::to_decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = value_.get_num();
  mpz_class absnum = num < 0 ? mpz_class(-num) : num;
  mpz_class scaled = absnum * scale / value_.get_den();
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  return (num < 0 ? "-" : "") + out;
}

BigRational& BigRational::operator+=(const BigRational& o) {
  value_ += o.value_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
  value_ -= o.value_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
  value_ *= o.value_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionByZeroInterval();
  value_ /= o.value_;
  return *this;
}

BigRational abs(const BigRational& q) { return q.sign() < 0 ? -q : q; }

BigRational pow(const BigRational& q, unsigned long exponent) {
  mpz_class num, den;
  mpz_class qn = q.numerator(), qd = q.denominator();
  mpz_pow_ui(num.get_mpz_t(), qn.get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), qd.get_mpz_t(), exponent);
  return BigRational(num, den);
}

}  // namespace transcert
