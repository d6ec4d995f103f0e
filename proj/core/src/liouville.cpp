#include "transcert/liouville.hpp"

#include "transcert/errors.hpp"

namespace transcert::liouville {

namespace {

unsigned long factorial(unsigned n) {
  unsigned long f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

mpz_class ten_to(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

BigRational tail_bound(unsigned n) { return BigRational(mpz_class(2), ten_to(factorial(n + 1))); }

std::vector<BigRational> poly_mul(const std::vector<BigRational>& p, const std::vector<BigRational>& q) {
  std::vector<BigRational> out(p.size() + q.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

}  // namespace

BigRational liouville_partial(unsigned n, long base, const std::vector<long>& coefficients) {
  if (n < 1) throw Error("liouville_partial: need n >= 1");
  if (base < 2) throw Error("liouville_partial: need base >= 2");
  if (!coefficients.empty() && coefficients.size() < n) throw Error("liouville_partial: need n coefficients");
  BigRational sum(0);
  for (unsigned k = 1; k <= n; ++k) {
    const long a = coefficients.empty() ? 1 : coefficients[k - 1];
    if (a < 0 || a >= base) throw Error("liouville_partial: coefficient out of range");
    if (a == 0) continue;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(base), factorial(k));
    sum += BigRational(mpz_class(a), den);
  }
  return sum;
}

Witness approx_witness(unsigned n) {
  if (n < 1 || n > kMaxWitness) throw Error("approx_witness: n must be in [1, 5]");
  Witness w;
  w.n = n;
  const BigRational partial = liouville_partial(n);
  w.q = ten_to(factorial(n));
  // partial has denominator dividing q; rescale the numerator to exactly q.
  w.p = partial.numerator() * (w.q / partial.denominator());
  w.gap_lower = BigRational(mpz_class(1), ten_to(factorial(n + 1)));
  w.gap_upper = tail_bound(n);
  mpz_class qn;
  mpz_pow_ui(qn.get_mpz_t(), w.q.get_mpz_t(), n);
  w.q_power = BigRational(mpz_class(1), qn);
  w.holds = w.gap_lower.sign() > 0 && w.gap_upper < w.q_power;
  return w;
}

std::vector<BigRational> expand_factored(const BigRational& a, const BigRational& c) {
  return poly_mul({c, a}, {BigRational(1), BigRational(1)});
}

Quadratic liouville_quadratic(unsigned n_terms, long precision) {
  if (n_terms < 2) throw Error("liouville_quadratic: need n_terms >= 2");
  Quadratic out;
  out.c_partial = liouville_partial(n_terms);
  out.a_partial = BigRational(1, 10) + out.c_partial;  // k = 0 term: 10^-0! = 10^-1
  out.tail = tail_bound(n_terms);
  out.a_is_c_plus_tenth = out.a_partial - out.c_partial == BigRational(1, 10);

  const BigRational a_lo = out.a_partial, a_hi = out.a_partial + out.tail;
  const BigRational c_lo = out.c_partial, c_hi = out.c_partial + out.tail;
  out.a = RInterval::from_rationals(a_lo, a_hi, precision);
  out.c = RInterval::from_rationals(c_lo, c_hi, precision);

  out.root1 = BigRational(-1);
  // A(-1)^2 + (A+C)(-1) + C on the truncated coefficients and on a generic sample.
  auto vanishes_at_minus_one = [](const BigRational& a, const BigRational& c) {
    return a - (a + c) + c == BigRational(0);
  };
  out.root1_verified = vanishes_at_minus_one(a_lo, c_lo) && vanishes_at_minus_one(a_hi, c_hi);

  auto expands = [](const BigRational& a, const BigRational& c) {
    const auto e = expand_factored(a, c);
    return e.size() == 3 && e[0] == c && e[1] == a + c && e[2] == a;
  };
  out.factorization_verified = expands(BigRational(2, 3), BigRational(5, 7)) && expands(a_lo, c_lo);

  // -C/A is negative, decreasing in C and increasing in A.
  out.root2 = RInterval::from_rationals(-(c_hi / a_lo), -(c_lo / a_hi), precision);

  const long w = precision + 32;
  const RInterval x = out.root2.with_precision(w);
  const RInterval a = out.a.with_precision(w), c = out.c.with_precision(w);
  // Horner form (A x + (A + C)) x + C.
  out.residual = add(mul(add(mul(a, x, w), add(a, c, w), w), x, w), c, w).rounded(precision);
  return out;
}

}  // namespace transcert::liouville
