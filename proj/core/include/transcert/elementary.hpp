#pragma once

#include "transcert/interval.hpp"

namespace transcert {

/// Number of guard bits carried by intermediate steps above the caller's precision.
inline constexpr long kGuardBits = 32;

// Certified elementary functions. Each returns an enclosure of the exact
// image of its argument, rounded outward to the argument's working precision.
// Internals run at precision + kGuardBits using argument reduction and
// truncated series whose remainders are added to the result explicitly.

RInterval exp(const RInterval& x);
/// Throws DomainError unless x.lo > 0.
RInterval ln(const RInterval& x);
/// Throws DomainError unless x.lo >= 0.
RInterval sqrt(const RInterval& x);
RInterval sin(const RInterval& x);
RInterval cos(const RInterval& x);
RInterval atan(const RInterval& x);
/// Throws DomainError unless x is inside [-1, 1].
RInterval acos(const RInterval& x);
RInterval sinh(const RInterval& x);
RInterval cosh(const RInterval& x);
/// base^exponent = exp(exponent * ln(base)); requires base.lo > 0.
RInterval pow(const RInterval& base, const RInterval& exponent);

enum class Elementary { Exp, Ln, Sqrt, Sin, Cos, Atan };

RInterval elem(const RInterval& x, Elementary f);

/// Enclosure of pi of width <= 4 * 2^-precision (Machin formula, alternating-series tail).
RInterval const_pi(long precision);
/// Enclosure of e of width <= 4 * 2^-precision (sum of 1/k!, tail bounded by 2/(n+1)!).
RInterval const_e(long precision);
RInterval const_ln2(long precision);

}  // namespace transcert
