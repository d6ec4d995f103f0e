#include "transcert/ybe.hpp"

#include <numbers>
#include <random>

#include "transcert/elementary.hpp"

namespace transcert::ybe {

std::size_t factor_dimension(std::size_t rows) {
  std::size_t n = 1;
  while (n * n < rows) ++n;
  if (n * n != rows) throw DimensionMismatch("J must act on V (x) V");
  return n;
}

QMatrix alpha_family(const BigRational& alpha) {
  if (alpha.is_zero()) throw ZeroAlpha();
  QMatrix j(4, 4);
  j(0, 3) = GaussianRational(BigRational(0), BigRational(1) / alpha);
  j(1, 2) = GaussianRational(BigRational(0), BigRational(1));
  j(2, 1) = GaussianRational(BigRational(0), BigRational(1));
  j(3, 0) = GaussianRational(BigRational(0), alpha);
  return j;
}

DMatrix alpha_family(double alpha) {
  if (alpha == 0.0) throw ZeroAlpha();
  DMatrix j(4, 4);
  j(0, 3) = {0.0, 1.0 / alpha};
  j(1, 2) = {0.0, 1.0};
  j(2, 1) = {0.0, 1.0};
  j(3, 0) = {0.0, alpha};
  return j;
}

DMatrix r_of_x(const DMatrix& j, double x) {
  if (!j.square()) throw DimensionMismatch("r_of_x: J must be square");
  return std::complex<double>(std::cos(x)) * DMatrix::identity(j.rows()) + std::complex<double>(std::sin(x)) * j;
}

double ybe_residual(const DMatrix& j, double x, double y) {
  const std::size_t n = factor_dimension(j.rows());
  auto r12 = [&](double t) { return lift12(r_of_x(j, t), n); };
  auto r23 = [&](double t) { return lift23(r_of_x(j, t), n); };
  const DMatrix lhs = r12(x) * r23(x + y) * r12(y);
  const DMatrix rhs = r23(y) * r12(x + y) * r23(x);
  return (lhs - rhs).max_norm();
}

MatrixExp matrix_exp(const DMatrix& a) {
  if (!a.square()) throw DimensionMismatch("matrix_exp: matrix must be square");
  constexpr int kTerms = 24;
  const double norm = a.inf_norm();
  int squarings = 0;
  while (std::ldexp(norm, -squarings) > 0.5) ++squarings;
  const DMatrix b = std::complex<double>(std::ldexp(1.0, -squarings)) * a;
  const double nb = std::ldexp(norm, -squarings);

  DMatrix sum = DMatrix::identity(a.rows());
  DMatrix term = sum;
  for (int k = 1; k <= kTerms; ++k) {
    term = std::complex<double>(1.0 / k) * (term * b);
    sum = sum + term;
  }
  // ||B||^(N+1) e^||B|| / (N+1)!
  double tail = std::exp(nb);
  for (int k = 1; k <= kTerms + 1; ++k) tail *= nb / k;

  // (X + D)^2 - X^2 is bounded by 2 ||X|| ||D|| + ||D||^2 with ||X|| <= e^||B||.
  double x_bound = std::exp(nb);
  for (int s = 0; s < squarings; ++s) {
    sum = sum * sum;
    tail = 2.0 * x_bound * tail + tail * tail;
    x_bound *= x_bound;
  }
  return {std::move(sum), tail};
}

double euler_matrix_residual(const DMatrix& j) {
  const MatrixExp e = matrix_exp(std::complex<double>(std::numbers::pi) * j);
  return (e.value + DMatrix::identity(j.rows())).max_norm() + e.truncation_bound;
}

namespace {

bool overlaps(const RInterval& a, const RInterval& b) { return a.lo() <= b.hi() && b.lo() <= a.hi(); }

}  // namespace

InequalityCheck matrix_inequality_check(const Mat2& x, long precision) {
  for (double v : x)
    if (!(v > 0.0) || !std::isfinite(v)) throw NonPositiveEntries();
  const long p = precision;
  const RInterval pi = const_pi(p).rounded(p);
  const RInterval e = const_e(p).rounded(p);
  std::array<RInterval, 4> xi;
  for (int k = 0; k < 4; ++k) xi[k] = RInterval::point(BigFloat::from_double(x[k]), p);
  const RInterval& a = xi[0];
  const RInterval& b = xi[1];
  const RInterval& c = xi[2];
  const RInterval& d = xi[3];

  InequalityCheck r;
  // X^2 = [[a^2 + bc, ab + bd], [ca + dc, cb + d^2]]
  r.direct[0] = sub(add(sqr(a, p), mul(b, c, p), p), mul(pi, a, p), p) + e;
  r.direct[1] = sub(add(mul(a, b, p), mul(b, d, p), p), mul(pi, b, p), p);
  r.direct[2] = sub(add(mul(c, a, p), mul(d, c, p), p), mul(pi, c, p), p);
  r.direct[3] = sub(add(mul(c, b, p), sqr(d, p), p), mul(pi, d, p), p) + e;

  r.trace_minus_pi = sub(add(a, d, p), pi, p);
  const RInterval bc = mul(b, c, p);
  r.certificate[0] = add(sub(sqr(a, p), mul(pi, a, p), p) + e, bc, p);
  r.certificate[1] = mul(b, r.trace_minus_pi, p);
  r.certificate[2] = mul(c, r.trace_minus_pi, p);
  r.certificate[3] = add(sub(sqr(d, p), mul(pi, d, p), p) + e, bc, p);

  r.holds = true;
  r.certificate_consistent = true;
  for (int k = 0; k < 4; ++k) {
    if (!r.direct[k].is_positive()) {
      r.holds = false;
      if (!r.witness_entry) r.witness_entry = k;
    }
    if (r.direct[k].is_negative()) r.violated = true;
    if (!overlaps(r.direct[k], r.certificate[k])) r.certificate_consistent = false;
    const double gap = std::abs(r.direct[k].midpoint().to_double() - r.certificate[k].midpoint().to_double());
    r.certificate_gap = std::max(r.certificate_gap, gap);
  }
  return r;
}

InequalityFuzz matrix_inequality_fuzz(std::size_t samples, std::uint64_t seed, long precision) {
  InequalityFuzz out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const RInterval pi = const_pi(precision);
  while (out.samples < samples) {
    Mat2 x;
    for (double& v : x) v = 10.0 * (1.0 - unit(rng));  // (0, 10]
    const RInterval trace_minus_pi = sub(RInterval::point(BigFloat::from_double(x[0] + x[3]), precision), pi, precision);
    // x[0] + x[3] may round; only keep samples whose exact trace is certified > pi.
    if (!trace_minus_pi.is_positive() || x[0] + x[3] - x[0] != x[3]) continue;
    ++out.samples;
    const InequalityCheck c = matrix_inequality_check(x, precision);
    if (c.holds) {
      ++out.holding;
    } else {
      out.failures.push_back(x);
    }
    out.all_consistent = out.all_consistent && c.certificate_consistent;
    out.max_certificate_gap = std::max(out.max_certificate_gap, c.certificate_gap);
  }
  return out;
}

}  // namespace transcert::ybe
