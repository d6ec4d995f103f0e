#pragma once

#include <string>
#include <vector>

#include "transcert/big_rational.hpp"
#include "transcert/claims/report.hpp"
#include "transcert/interval.hpp"

namespace transcert::claims {

/// f(z, w) = |e^z + e^w| as expression text; z and w are expression fragments.
std::string unified_f(const std::string& z, const std::string& w);

/// Expression text for an exact rational, e.g. "(-11/4)".
std::string rational_expr(const BigRational& q);

struct GridResult {
  Verdict verdict;
  std::size_t points = 0;
  std::size_t certified = 0;
  /// Smallest certified lower bound of the modulus, and where it occurs.
  RInterval min_modulus;
  BigRational min_x;
  BigRational min_y;
};

/// |e^(1-z) + e^conj(z)| > pi at every point of the grid step*Z^2 within [-h, h]^2.
GridResult claim_new6_grid(const BigRational& step, const BigRational& half_width = BigRational(3), long precision = 128,
                           long max_precision = 512);

struct ReductionResult {
  Verdict verdict;
  RInterval margin;           // 2 sqrt(e) - pi
  RInterval identity_lhs;     // |e^(1-z) + e^conj(z)| at z = 2 - 3i
  RInterval identity_rhs;     // e^-1 + e^2
  bool identity_ok = false;
  /// The modulus matches e^(1-x) + e^x on every sampled (x, y).
  bool independence_ok = false;
  double max_deviation = 0.0;  // max |mid difference| over the sample
  bool stationary_ok = false;  // values at 0.4 and 0.6 exceed the value at 1/2
};

ReductionResult claim_new6_reduction(long precision = 128);

struct XiIxResult {
  Verdict verdict;
  Verdict half_pi_vs_inv_e;
  Verdict peak_vs_target;        // e^(1/e) < e^(pi/2)
  RInterval peak;                // e^(1/e)
  RInterval target;              // e^(pi/2)
  std::size_t samples = 0;
  bool samples_below_peak = false;
  double sampled_argmax = 0.0;
};

XiIxResult claim_xi_ix(long precision = 128, long max_precision = 512);

struct RThreshold {
  Verdict verdict;
  RInterval r_star;
  BigRational at_four;   // (5/4)^4
  BigRational at_five;   // (6/5)^5
  RInterval quarter_pi_squared;
  bool bracket_ok = false;
  int iterations = 0;
};

/// Bisection on g(r) = (1+1/r)^r - pi^2/4 over [4, 5] until the bracket is narrower than tol.
RThreshold claim_r_threshold(const BigRational& tol, long precision = 128);

/// Angle between sides x and y of a triangle whose third side is `opposite`.
RInterval triangle_angle(const RInterval& x, const RInterval& y, const RInterval& opposite, long precision);

/// B = arccos((1 + pi^2 - e^2) / (2 pi)) against 1 radian.
Report claim_triangle_angle(long precision = 128);

}  // namespace transcert::claims
