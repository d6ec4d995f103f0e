#include <gtest/gtest.h>

#include "checks.hpp"
#include "oracles.hpp"
#include "transcert/elementary.hpp"
#include "transcert/errors.hpp"
#include "transcert/quadrature.hpp"

using namespace transcert;
using namespace transcert::quad;
using testing_support::Encloses;
using testing_support::width;

namespace {

// Cubic 2x^3 - x^2 + 3 with vanishing fourth derivative.
IntegrandSpec cubic() {
  return {[](const RInterval& x) {
            const long p = x.precision();
            return 2 * pow(x, 3, p) - sqr(x, p) + 3;
          },
          [](const RInterval& x) { return RInterval::from_int(0, x.precision()); }};
}

BigRational cubic_antiderivative(const BigRational& x) {
  return BigRational(1, 2) * pow(x, 4) - BigRational(1, 3) * pow(x, 3) + 3 * x;
}

}  // namespace

TEST(Simpson, GaussianOnUnitInterval) {
  const RInterval r = verified_simpson(gaussian(), 0, 1, 64, 128);
  EXPECT_TRUE(Encloses(r, oracle::kGauss01));
  // h^5/90 * sum sup|f''''| is about 4.5e-9 at n = 64; see the decisions ledger.
  EXPECT_LE(width(r), 5e-9);
}

TEST(Simpson, ConstantIntegrandIsExact) {
  const IntegrandSpec one{[](const RInterval& x) { return RInterval::from_int(1, x.precision()); },
                          [](const RInterval& x) { return RInterval::from_int(0, x.precision()); }};
  const RInterval r = verified_simpson(one, 0, 1, 2, 64);
  EXPECT_TRUE(r.contains(BigRational(1)));
  EXPECT_LE(width(r), 1e-18);
}

TEST(Simpson, CubicsAreExact) {
  const std::pair<BigRational, BigRational> ranges[] = {{0, 1}, {-1, 2}, {BigRational(-7, 3), BigRational(5, 4)}};
  for (const auto& [a, b] : ranges) {
    for (unsigned n : {2u, 6u, 40u}) {
      const RInterval r = verified_simpson(cubic(), a, b, n, 128);
      EXPECT_TRUE(r.contains(cubic_antiderivative(b) - cubic_antiderivative(a)));
      EXPECT_LE(width(r), 1e-30);
    }
  }
}

TEST(Simpson, SymmetricRangeDoublesHalf) {
  const RInterval full = verified_simpson(gaussian(), -1, 1, 128, 128);
  const RInterval half = verified_simpson(gaussian(), 0, 1, 64, 128);
  EXPECT_EQ(certified_compare(full, 2 * half), Ordering::Overlap);
}

TEST(Simpson, WidthShrinksLikeFourthPower) {
  const double w1 = width(verified_simpson(gaussian(), 0, 1, 16, 128));
  const double w2 = width(verified_simpson(gaussian(), 0, 1, 32, 128));
  const double w4 = width(verified_simpson(gaussian(), 0, 1, 64, 128));
  EXPECT_GE(w1 / w2, 12.0);
  EXPECT_LE(w1 / w2, 20.0);
  EXPECT_GE(w2 / w4, 12.0);
  EXPECT_LE(w2 / w4, 20.0);
}

TEST(Simpson, Preconditions) {
  EXPECT_THROW(verified_simpson(gaussian(), 1, 0, 4, 64), Error);
  EXPECT_THROW(verified_simpson(gaussian(), 0, 1, 3, 64), Error);
  EXPECT_THROW(verified_simpson(gaussian(), 0, 1, 0, 64), Error);
}

TEST(GaussTail, Examples) {
  const RInterval t4 = gauss_tail(4, 128);
  EXPECT_TRUE(t4.lo().is_zero());
  EXPECT_LE(t4.hi().to_double(), 1.5e-8);
  EXPECT_TRUE(Encloses(gauss_tail(4, 128), oracle::kGaussTail4));

  const RInterval t10 = gauss_tail(10, 128);
  EXPECT_LE(t10.hi().to_double(), 2e-45);
  EXPECT_TRUE(Encloses(t10, oracle::kGaussTail10));

  const RInterval t1 = gauss_tail(1, 128);
  EXPECT_TRUE(Encloses(t1, oracle::kTail1));
  EXPECT_GE(t1.hi().to_double(), 0.1839);
  EXPECT_THROW(gauss_tail(0, 64), Error);
}

TEST(GaussTail, UpperBoundDecreasesInT) {
  BigFloat previous = gauss_tail(BigRational(1, 10), 96).hi();
  for (int k = 2; k <= 80; ++k) {
    const BigFloat current = gauss_tail(BigRational(k, 10), 96).hi();
    EXPECT_TRUE(current < previous) << k;
    previous = current;
  }
}

TEST(GaussIdentity, DefaultParameters) {
  const Verdict v = claim_gauss_identity(4, 2000, 128);
  EXPECT_EQ(v.kind, VerdictKind::ConsistentWithin);
  ASSERT_TRUE(v.within.has_value());
  EXPECT_LE(v.within->to_double(), 1e-7);
  ASSERT_TRUE(v.rhs.has_value());
  EXPECT_TRUE(Encloses(v.rhs->re(), oracle::kSqrtPi));
}

TEST(GaussIdentity, ShortRangeIsTailDominated) {
  const Verdict v = claim_gauss_identity(2, 200, 128);
  EXPECT_EQ(v.kind, VerdictKind::ConsistentWithin);
  EXPECT_LE(v.within->to_double(), 1e-2);
  EXPECT_GE(v.within->to_double(), 0.009);
  EXPECT_THROW(claim_gauss_identity(1, 200, 128), Error);
}

TEST(IntegralBound, Examples) {
  const IntegralBound r01 = claim_integral_bound(0, 1, 400, 128);
  EXPECT_EQ(r01.verdict.kind, VerdictKind::CertifiedTrue);
  ASSERT_TRUE(r01.verdict.lhs && r01.verdict.rhs);
  EXPECT_TRUE(Encloses(r01.verdict.lhs->re(), oracle::kGauss01));
  EXPECT_TRUE(Encloses(r01.verdict.rhs->re(), oracle::kBoundRhs01));

  EXPECT_EQ(claim_integral_bound(-1, 2, 400, 128).verdict.kind, VerdictKind::CertifiedTrue);
  EXPECT_EQ(claim_integral_bound(1, 3, 400, 128).verdict.kind, VerdictKind::CertifiedTrue);

  EXPECT_EQ(r01.discriminant.kind, VerdictKind::CertifiedTrue);
  ASSERT_TRUE(r01.discriminant.lhs.has_value());
  EXPECT_TRUE(Encloses(r01.discriminant.lhs->re(), oracle::kDisc));
  EXPECT_THROW(claim_integral_bound(1, 1, 400, 128), Error);
}
