#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "checks.hpp"
#include "oracles.hpp"
#include "transcert/elementary.hpp"
#include "transcert/errors.hpp"
#include "transcert/interval.hpp"

using namespace transcert;
using testing_support::Encloses;

namespace {

// One unit in the last place of the largest endpoint magnitude.
double ulp(const RInterval& x) {
  const BigFloat m = x.mag();
  if (m.is_zero()) return std::ldexp(1.0, -static_cast<int>(x.precision()));
  return std::ldexp(1.0, static_cast<int>(m.exponent() - x.precision()));
}

double width_over_ulp(const RInterval& x) { return x.width().to_double() / ulp(x); }

BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 9999);
  return BigRational(num(rng), den(rng));
}

}  // namespace

TEST(BigRational, ParsesDecimalAndFractionForms) {
  EXPECT_EQ(BigRational::parse("1.25e-3"), BigRational(1, 800));
  EXPECT_EQ(BigRational::parse("3/6"), BigRational(1, 2));
  EXPECT_EQ(BigRational::parse("-0.5"), BigRational(-1, 2));
  EXPECT_EQ(BigRational::power(10, -3), BigRational(1, 1000));
  EXPECT_EQ(BigRational(1, 3).to_decimal(5), "0.33333");
}

TEST(BigFloat, DirectedRoundingBracketsOneThird) {
  const BigRational third(1, 3);
  const BigFloat lo = BigFloat::from_rational(third, 53, Round::Down);
  const BigFloat hi = BigFloat::from_rational(third, 53, Round::Up);
  EXPECT_TRUE(lo < hi);
  EXPECT_LT(lo.to_rational(), third);
  EXPECT_GT(hi.to_rational(), third);
}

TEST(Arith, ExactIntegerSum) {
  const RInterval r = RInterval::from_int(1, 64) + RInterval::from_int(2, 64);
  EXPECT_TRUE(r.is_point());
  EXPECT_TRUE(r.contains(BigRational(3)));
}

TEST(Arith, SignCaseProduct) {
  const RInterval a(BigFloat::from_int(1), BigFloat::from_int(2), 64);
  const RInterval b(BigFloat::from_int(-1), BigFloat::from_int(1), 64);
  const RInterval r = a * b;
  EXPECT_EQ(r.lo().to_double(), -2.0);
  EXPECT_EQ(r.hi().to_double(), 2.0);
}

TEST(Arith, OneThirdWithinTwoUlp) {
  const RInterval r = RInterval::from_int(1, 53) / RInterval::from_int(3, 53);
  EXPECT_TRUE(r.contains(BigRational(1, 3)));
  EXPECT_LE(width_over_ulp(r), 2.0);
}

TEST(Arith, DivisionByZeroIntervalThrows) {
  const RInterval z(BigFloat::from_int(-1), BigFloat::from_int(1), 64);
  EXPECT_THROW(RInterval::from_int(1, 64) / z, DivisionByZeroInterval);
}

TEST(Arith, RandomRationalContainment) {
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 500; ++k) {
    const BigRational a = random_rational(rng);
    const BigRational b = random_rational(rng);
    const RInterval ia = RInterval::from_rational(a, 53);
    const RInterval ib = RInterval::from_rational(b, 53);
    EXPECT_TRUE((ia + ib).contains(a + b));
    EXPECT_TRUE((ia - ib).contains(a - b));
    EXPECT_TRUE((ia * ib).contains(a * b));
    if (!b.is_zero()) {
      EXPECT_TRUE((ia / ib).contains(a / b));
    }
  }
}

TEST(Elementary, ExpOfZero) {
  const RInterval r = exp(RInterval::from_int(0, 128));
  EXPECT_TRUE(r.contains(BigRational(1)));
  EXPECT_LE(width_over_ulp(r), 8.0);
}

TEST(Elementary, SinOfPiContainsZero) { EXPECT_TRUE(sin(const_pi(64)).contains_zero()); }

TEST(Elementary, LnOfEContainsOne) { EXPECT_TRUE(ln(const_e(128)).contains(BigRational(1))); }

TEST(Elementary, DomainErrors) {
  EXPECT_THROW(ln(RInterval::from_int(0, 64)), DomainError);
  EXPECT_THROW(ln(RInterval::from_int(-2, 64)), DomainError);
  EXPECT_THROW(sqrt(RInterval::from_int(-1, 64)), DomainError);
  EXPECT_THROW(acos(RInterval::from_int(2, 64)), DomainError);
}

TEST(Elementary, KnownValues) {
  EXPECT_TRUE(Encloses(cos(RInterval::from_int(1, 128)), oracle::kCos1));
  EXPECT_TRUE(Encloses(sin(RInterval::from_int(1, 128)), oracle::kSin1));
  EXPECT_TRUE(Encloses(ln(const_pi(128)), oracle::kLnPi));
  EXPECT_TRUE(Encloses(sqrt(const_pi(128)), oracle::kSqrtPi));
  EXPECT_TRUE(Encloses(4 * atan(RInterval::from_int(1, 128)), oracle::kPi));
}

TEST(Elementary, PointWidthWithinEightUlp) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (long p : {53L, 128L, 256L}) {
    for (int k = 0; k < 60; ++k) {
      const double v = u(rng);
      const RInterval x = RInterval::point(BigFloat::from_double(v), p);
      EXPECT_LE(width_over_ulp(exp(x)), 8.0) << "exp " << v;
      EXPECT_LE(width_over_ulp(sin(x)), 8.0) << "sin " << v;
      EXPECT_LE(width_over_ulp(cos(x)), 8.0) << "cos " << v;
      EXPECT_LE(width_over_ulp(atan(x)), 8.0) << "atan " << v;
      const RInterval ax = RInterval::point(BigFloat::from_double(std::fabs(v) + 1e-3), p);
      EXPECT_LE(width_over_ulp(ln(ax)), 8.0) << "ln " << v;
      EXPECT_LE(width_over_ulp(sqrt(ax)), 8.0) << "sqrt " << v;
    }
  }
}

TEST(Elementary, PythagoreanIdentityOnRandomPoints) {
  std::mt19937_64 rng(1000);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int k = 0; k < 1000; ++k) {
    const RInterval x = RInterval::point(BigFloat::from_double(u(rng)), 96);
    const RInterval s = sin(x);
    const RInterval c = cos(x);
    ASSERT_TRUE((sqr(s, 96) + sqr(c, 96)).contains(BigRational(1)));
  }
}

TEST(Elementary, RefinementNeverWidensBeyondOneCoarseUlp) {
  const auto exprs = {
      +[](long p) { return exp(RInterval::from_int(1, p)); },
      +[](long p) { return ln(RInterval::from_int(3, p)); },
      +[](long p) { return sin(RInterval::from_int(10, p)); },
      +[](long p) { return atan(RInterval::from_rational(BigRational(1, 7), p)); },
      +[](long p) { return const_pi(p) * const_e(p); },
  };
  for (auto f : exprs) {
    for (long p : {32L, 64L, 128L, 256L}) {
      const RInterval coarse = f(p);
      const RInterval fine = f(2 * p);
      EXPECT_LE(fine.width().to_double(), coarse.width().to_double() + ulp(coarse));
    }
  }
}

TEST(Constants, FiftyDecimalsAtTwoHundredBits) {
  // Both endpoints truncate to the published 50-place expansion.
  for (const auto& [x, digits] : {std::pair{const_pi(200), oracle::kPi50}, std::pair{const_e(200), oracle::kE50}}) {
    const BigRational lo = BigRational::parse(digits);
    const BigRational hi = lo + BigRational::power(10, -50);
    EXPECT_LE(lo, x.lo().to_rational());
    EXPECT_LT(x.hi().to_rational(), hi);
    EXPECT_LE(x.width(), BigFloat::power_of_two(-198));
  }
}

TEST(Constants, DoublePrecisionEnclosures) {
  EXPECT_TRUE(Encloses(const_pi(53), oracle::kPi));
  EXPECT_TRUE(Encloses(const_e(53), oracle::kE));
  EXPECT_LE(width_over_ulp(const_pi(53)), 4.0);
}

TEST(CertifiedCompare, Examples) {
  const RInterval pi = const_pi(64);
  const RInterval e = const_e(64);
  EXPECT_EQ(certified_compare(sqr(pi, 64), 4 * e), Ordering::Less);
  EXPECT_EQ(certified_compare(pow(pi, 3, 64), 4 * sqr(e, 64)), Ordering::Greater);
  const RInterval a(BigFloat::from_int(1), BigFloat::from_int(2), 64);
  const RInterval b(BigFloat::from_double(1.5), BigFloat::from_int(3), 64);
  EXPECT_EQ(certified_compare(a, b), Ordering::Overlap);
}

TEST(Interval, DecimalPrintingIsOutward) {
  const RInterval x = RInterval::from_rational(BigRational(2, 3), 64);
  const std::string s = x.to_string(5);
  EXPECT_NE(s.find("0.66666"), std::string::npos);
  EXPECT_NE(s.find("0.66667"), std::string::npos);
}
