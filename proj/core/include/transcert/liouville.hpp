#pragma once

#include <gmpxx.h>
#include <vector>

#include "transcert/big_rational.hpp"
#include "transcert/interval.hpp"

namespace transcert::liouville {

/// sum_{k=1..n} a_k b^(-k!) exactly. An empty coefficient list means a_k = 1.
/// Requires n >= 1, b >= 2 and 0 <= a_k < b.
BigRational liouville_partial(unsigned n, long base = 10, const std::vector<long>& coefficients = {});

/// Largest n accepted by approx_witness. q = 10^(6!) already has 721 digits.
inline constexpr unsigned kMaxWitness = 5;

struct Witness {
  unsigned n = 0;
  mpz_class p;
  mpz_class q;             // 10^(n!)
  BigRational gap_lower;   // 10^-(n+1)!
  BigRational gap_upper;   // 2 * 10^-(n+1)!
  BigRational q_power;     // q^-n
  bool holds = false;      // 0 < gap_lower and gap_upper < q^-n
};

/// Rational approximation p/q of Liouville's constant with the exact gap bound.
/// Requires 1 <= n <= kMaxWitness.
Witness approx_witness(unsigned n);

struct Quadratic {
  BigRational a_partial;   // sum_{k=0..n} 10^-k!
  BigRational c_partial;   // sum_{k=1..n} 10^-k!
  BigRational tail;        // 2 * 10^-(n+1)!, bounds both truncations
  RInterval a;
  RInterval c;
  BigRational root1;       // -1
  RInterval root2;         // -C/A
  RInterval residual;      // A x^2 + (A+C) x + C over the root2 enclosure
  bool root1_verified = false;
  bool factorization_verified = false;
  bool a_is_c_plus_tenth = false;
};

/// Roots of A x^2 + (A+C) x + C = (Ax+C)(x+1) with Liouville-type coefficients.
/// Requires n_terms >= 2.
Quadratic liouville_quadratic(unsigned n_terms, long precision);

/// Coefficients (c0, c1, c2) of (Ax + C)(x + 1), expanded exactly.
std::vector<BigRational> expand_factored(const BigRational& a, const BigRational& c);

}  // namespace transcert::liouville
