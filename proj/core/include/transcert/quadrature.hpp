#pragma once

#include <functional>

#include "transcert/big_rational.hpp"
#include "transcert/interval.hpp"
#include "transcert/verdict.hpp"

namespace transcert::quad {

/// An integrand known through two interval-evaluable functions: the value
/// f(x), and an enclosure of the fourth derivative f'''' over a subinterval.
struct IntegrandSpec {
  std::function<RInterval(const RInterval&)> value;
  std::function<RInterval(const RInterval&)> fourth_derivative;
};

/// e^(-x^2), with f'''' = (16x^4 - 48x^2 + 12) e^(-x^2).
IntegrandSpec gaussian();

/// Composite Simpson rule with a rigorous remainder.
///
/// The point estimate is evaluated in interval arithmetic and widened by
/// h^4/180 * sum over panels of (2h * sup|f''''| on the panel), where h = (b-a)/n.
/// Requires a < b and n even, n >= 2.
RInterval verified_simpson(const IntegrandSpec& f, const BigRational& a, const BigRational& b, unsigned n,
                           long precision);

/// [0, e^(-T^2) / (2T)], an enclosure of the Gaussian tail integral from T to infinity.
RInterval gauss_tail(const BigRational& t, long precision);

/// Encloses the integral of e^(-x^2) over the real line as Simpson on [-T, T] plus
/// both tails, and compares it with sqrt(pi). ConsistentWithin(width) when the
/// difference encloses 0, CertifiedFalse otherwise. Requires T >= 2.
Verdict claim_gauss_identity(const BigRational& t, unsigned n, long precision);

struct IntegralBound {
  /// Simpson enclosure of the integral of e^(-x^2) over [a, b] against (e^e/pi)(e^(-pi a) - e^(-pi b)).
  Verdict verdict;
  /// pi^2 - 4e < 0, which makes x^2 - pi x + e > 0 for every real x and hence
  /// e^(-x^2) < e^(e - pi x) pointwise.
  Verdict discriminant;
};

/// Requires a < b.
IntegralBound claim_integral_bound(const BigRational& a, const BigRational& b, unsigned n, long precision);

}  // namespace transcert::quad
