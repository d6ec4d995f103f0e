#include <gtest/gtest.h>

#include "checks.hpp"
#include "oracles.hpp"
#include "transcert/errors.hpp"
#include "transcert/liouville.hpp"

using namespace transcert;
using namespace transcert::liouville;
using testing_support::Encloses;

namespace {

long factorial(unsigned n) { return n <= 1 ? 1 : static_cast<long>(n) * factorial(n - 1); }

}  // namespace

TEST(Partial, Examples) {
  EXPECT_EQ(liouville_partial(1), BigRational(1, 10));
  EXPECT_EQ(liouville_partial(2), BigRational(11, 100));
  EXPECT_EQ(liouville_partial(3), BigRational(110001, 1000000));
}

TEST(Partial, ConsecutiveDifferenceIsExactPower) {
  for (unsigned n = 2; n <= 6; ++n)
    EXPECT_EQ(liouville_partial(n) - liouville_partial(n - 1), BigRational::power(10, -factorial(n))) << n;
}

TEST(Partial, OtherBasesAndDigits) {
  EXPECT_EQ(liouville_partial(3, 2), BigRational(1, 2) + BigRational(1, 4) + BigRational(1, 64));
  EXPECT_EQ(liouville_partial(2, 10, {3, 7}), BigRational(37, 100));
  EXPECT_THROW(liouville_partial(0), Error);
  EXPECT_THROW(liouville_partial(2, 1), Error);
  EXPECT_THROW(liouville_partial(2, 10, {3, 10}), Error);
}

TEST(Witness, Examples) {
  const Witness w2 = approx_witness(2);
  EXPECT_EQ(w2.q, 100);
  EXPECT_EQ(w2.gap_upper, 2 * BigRational::power(10, -6));
  EXPECT_EQ(w2.q_power, BigRational::power(10, -4));
  EXPECT_TRUE(w2.holds);

  const Witness w3 = approx_witness(3);
  EXPECT_EQ(w3.q, 1000000);
  EXPECT_EQ(w3.gap_upper, 2 * BigRational::power(10, -24));
  EXPECT_EQ(w3.q_power, BigRational::power(10, -18));
  EXPECT_TRUE(w3.holds);

  const Witness w1 = approx_witness(1);
  EXPECT_EQ(w1.q, 10);
  EXPECT_TRUE(w1.holds);
}

TEST(Witness, HoldsUpToCap) {
  for (unsigned n = 1; n <= kMaxWitness; ++n) {
    const Witness w = approx_witness(n);
    EXPECT_TRUE(w.holds) << n;
    EXPECT_EQ(BigRational(w.p, w.q), liouville_partial(n));
    // The true gap lies between the bounds: check against a longer partial sum.
    const BigRational gap = liouville_partial(n + 2) - liouville_partial(n);
    EXPECT_LE(w.gap_lower, gap);
    EXPECT_LT(gap, w.gap_upper);
  }
  EXPECT_THROW(approx_witness(0), Error);
  EXPECT_THROW(approx_witness(kMaxWitness + 1), Error);
}

TEST(Quadratic, RootsAndResidual) {
  const Quadratic q = liouville_quadratic(4, 128);
  EXPECT_EQ(q.root1, BigRational(-1));
  EXPECT_TRUE(q.root1_verified);
  EXPECT_TRUE(q.factorization_verified);
  EXPECT_TRUE(q.a_is_c_plus_tenth);
  EXPECT_EQ(q.a_partial - q.c_partial, BigRational(1, 10));
  EXPECT_TRUE(Encloses(q.root2, oracle::kLiouvilleRoot2));
  EXPECT_TRUE(q.residual.contains_zero());
  EXPECT_THROW(liouville_quadratic(1, 128), Error);
}

TEST(Quadratic, SubstitutingMinusOneTelescopes) {
  const BigRational a = liouville_partial(4) + BigRational(1, 10);
  const BigRational c = liouville_partial(4);
  EXPECT_TRUE((a - (a + c) + c).is_zero());
}

TEST(Quadratic, ExpansionIsExact) {
  const auto coeffs = expand_factored(BigRational(2, 3), BigRational(5, 7));
  ASSERT_EQ(coeffs.size(), 3u);
  EXPECT_EQ(coeffs[0], BigRational(5, 7));
  EXPECT_EQ(coeffs[1], BigRational(2, 3) + BigRational(5, 7));
  EXPECT_EQ(coeffs[2], BigRational(2, 3));
}
