#pragma once

#include <gtest/gtest.h>

#include <string_view>

#include "transcert/big_rational.hpp"
#include "transcert/cinterval.hpp"
#include "transcert/interval.hpp"

namespace testing_support {

// The oracle strings carry 64 significant digits, so the true value lies within
// a relative 1e-62 of them. An enclosure is consistent with the oracle when it
// meets that band.
inline ::testing::AssertionResult Encloses(const transcert::RInterval& x, std::string_view oracle) {
  using transcert::BigRational;
  const BigRational v = BigRational::parse(oracle);
  BigRational band = transcert::abs(v) * BigRational::power(10, -62);
  if (band.is_zero()) band = BigRational::power(10, -70);
  const long p = x.precision() + 64;
  const auto lo = transcert::RInterval::from_rational(v - band, p);
  const auto hi = transcert::RInterval::from_rational(v + band, p);
  if (x.lo() <= hi.hi() && lo.lo() <= x.hi()) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << x.to_string(x.natural_digits()) << " does not enclose " << oracle;
}

inline ::testing::AssertionResult Encloses(const transcert::CInterval& z, std::string_view re, std::string_view im) {
  auto r = Encloses(z.re(), re);
  if (!r) return r;
  return Encloses(z.im(), im);
}

inline double width(const transcert::RInterval& x) { return x.width().to_double(); }

}  // namespace testing_support
