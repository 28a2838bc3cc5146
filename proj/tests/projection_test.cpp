#include <gtest/gtest.h>

#include <random>

#include "cadorder/parser.hpp"
#include "cadorder/projection.hpp"
#include "test_support.hpp"

namespace cadorder {
namespace {

using testing::var;

const Variable x("x");
const Variable y("y");
const Variable z("z");

Polynomial P(const char* text) { return parse_polynomial(text); }
VariableOrdering O(const char* text) { return VariableOrdering::parse(text); }

TEST(ProjectOnce, Examples) {
  EXPECT_EQ(project_once({P("x^2 + y")}, x), std::vector{var("y")});
  EXPECT_EQ(project_once({P("x^2 + y")}, y), std::vector{P("x^2")});
  EXPECT_TRUE(project_once({P("x - 1")}, x).empty());
  EXPECT_THROW(project_once({}, x), MathError);
}

TEST(ProjectOnce, PassThroughAndResultants) {
  // y - 1 passes through; resultant(x - y, x + y, x) = 2y reduces to y.
  const auto out = project_once({P("x - y"), P("x + y"), P("y - 1")}, x);
  EXPECT_EQ(out, (std::vector{P("y"), P("y - 1")}));
}

TEST(ProjectOnce, OutputIsReduced) {
  std::mt19937_64 rng(41);
  const std::vector<Variable> vars{x, y, z};
  for (int i = 0; i < 50; ++i) {
    std::vector<Polynomial> level;
    for (int k = 0; k < 3; ++k) level.push_back(testing::random_in(rng, vars, z, 3, 3));
    const auto out = project_once(level, z);
    for (std::size_t j = 0; j < out.size(); ++j) {
      EXPECT_FALSE(out[j].is_constant());
      EXPECT_EQ(canonicalize(out[j]), out[j]);
      EXPECT_FALSE(out[j].involves(z));
      if (j > 0) {
        EXPECT_LT(out[j - 1], out[j]);
      }
    }
  }
}

TEST(FullProjection, Examples) {
  const auto s = parse_system("x^2 + y");
  const auto yx = full_projection(s, O("y>x"));
  ASSERT_EQ(yx.size(), 2U);
  EXPECT_EQ(yx.level(2), std::vector{P("x^2 + y")});
  EXPECT_EQ(yx.level(1), std::vector{var("y")});

  const auto xy = full_projection(s, O("x>y"));
  EXPECT_EQ(xy.level(1), std::vector{P("x^2")});

  const auto single = full_projection(parse_system("x - 1"), O("x"));
  ASSERT_EQ(single.size(), 1U);
  EXPECT_EQ(single.level(1), std::vector{P("x - 1")});
}

TEST(FullProjection, InputLevelIsCanonicalized) {
  const auto ps = full_projection(parse_system("-2*x + 4\nx - 2\n6*y"), O("x>y"));
  EXPECT_EQ(ps.level(2), (std::vector{var("y"), P("x - 2")}));
  EXPECT_EQ(ps.level(1), std::vector{P("x - 2")});
}

TEST(FullProjection, EmptyLevelsPropagate) {
  const auto ps = full_projection(parse_system("vars: x, y, z\nz - 1"), O("z>y>x"));
  EXPECT_EQ(ps.level(3), std::vector{P("z - 1")});
  EXPECT_EQ(ps.level(2), std::vector{P("z - 1")});
  EXPECT_EQ(ps.level(1), std::vector{P("z - 1")});

  const auto gone = full_projection(parse_system("vars: x, y\nx - 1"), O("y>x"));
  EXPECT_TRUE(gone.level(1).empty());
}

TEST(FullProjection, RejectsNonPermutation) {
  const auto s = parse_system("x*y*z");
  EXPECT_THROW(full_projection(s, O("x>y")), Error);
  EXPECT_THROW(full_projection(s, O("x>y>w")), Error);
}

TEST(FullProjectionProperties, LevelsContainOnlyPrefixVariables) {
  std::mt19937_64 rng(42);
  const std::vector<Variable> vars{x, y, z};
  for (int i = 0; i < 30; ++i) {
    const auto s = make_system(vars, {testing::random_in(rng, vars, x, 3, 3), testing::random_in(rng, vars, z, 2, 2)});
    for (const auto& o : enumerate_orderings(vars)) {
      const auto ps = full_projection(s, o);
      ASSERT_EQ(ps.size(), 3U);
      for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& p : ps.level(k)) {
          for (const auto& v : p.variables()) {
            const auto pos = std::find(o.tuple.begin(), o.tuple.end(), v) - o.tuple.begin();
            EXPECT_LT(static_cast<std::size_t>(pos), k);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace cadorder
