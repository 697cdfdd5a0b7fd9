#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "implicit/rat_param.hpp"

namespace implicit {
namespace {

using testing::up;

TEST(RatParam, ReducesCommonFactorsAndFlagsIt) {
  // (t^2 - 1)/(t - 1) = t + 1
  const RatParam p(up({-1, 0, 1}), up({-1, 1}), up({0, 1}), up({1}));
  EXPECT_TRUE(p.reduced());
  EXPECT_EQ(p.x_numerator(), up({1, 1}));
  EXPECT_EQ(p.x_denominator(), up({1}));
  EXPECT_FALSE(testing::hyperbola().reduced());
}

TEST(RatParam, RejectsZeroDenominator) {
  EXPECT_THROW(RatParam(up({1}), UniPoly{}, up({1}), up({1})), InvalidArgument);
}

TEST(SubstituteCheck, Examples) {
  EXPECT_TRUE(substitute_check(testing::hyperbola_F(), testing::hyperbola()));
  EXPECT_FALSE(substitute_check(BiPoly(1, 0, testing::rats({0, 1})), testing::hyperbola()));
  EXPECT_TRUE(substitute_check(testing::cubic_example_F(), testing::cubic_example()));
  EXPECT_THROW(substitute_check(BiPoly(1, 1), testing::hyperbola()), InvalidArgument);
}

TEST(SubstituteCheck, InvariantUnderScalingAndPadding) {
  const BiPoly f = testing::cubic_example_F();
  EXPECT_TRUE(substitute_check(f * make_rat(-7, 3), testing::cubic_example()));
  // Larger bounds than necessary only multiply by extra denominator powers.
  BiPoly padded(2, 2);
  padded.at(0, 0) = 2;
  padded.at(0, 1) = -3;
  padded.at(1, 0) = -1;
  padded.at(1, 1) = 2;
  EXPECT_TRUE(substitute_check(padded, testing::hyperbola()));
  BiPoly off = testing::hyperbola_F();
  off.at(0, 0) = 3;
  EXPECT_FALSE(substitute_check(off, testing::hyperbola()));
}

}  // namespace
}  // namespace implicit
