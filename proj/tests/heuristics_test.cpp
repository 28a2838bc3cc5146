#include <gtest/gtest.h>

#include <random>

#include "cadorder/heuristics.hpp"
#include "cadorder/parser.hpp"
#include "test_support.hpp"

namespace cadorder {
namespace {

const Variable x("x");
const Variable y("y");
const Variable z("z");

VariableOrdering O(const char* text) { return VariableOrdering::parse(text); }

TEST(VariableOrdering, ParseAndRender) {
  EXPECT_EQ(O("x>y>z").to_string(), "x>y>z");
  EXPECT_EQ(O("x>y>z").first_eliminated(), z);
  EXPECT_THROW(O("x>>y"), Error);
  EXPECT_THROW(O("x>y>x"), Error);
  EXPECT_THROW(O(""), Error);
}

TEST(EnumerateOrderings, Examples) {
  const auto three = enumerate_orderings({z, x, y});
  ASSERT_EQ(three.size(), 6U);
  EXPECT_EQ(three.front(), O("x>y>z"));
  EXPECT_EQ(three.back(), O("z>y>x"));
  EXPECT_TRUE(std::is_sorted(three.begin(), three.end()));
  EXPECT_EQ(enumerate_orderings({x}), std::vector{O("x")});
  EXPECT_EQ(enumerate_orderings({Variable("w"), x, y, z}).size(), 24U);
}

TEST(EnumerateOrderings, Cap) {
  std::vector<Variable> eight;
  for (char c = 'a'; c < 'i'; ++c) eight.emplace_back(std::string(1, c));
  try {
    enumerate_orderings(eight);
    FAIL() << "expected cap error";
  } catch (const LimitError& e) {
    EXPECT_NE(std::string(e.what()).find("7"), std::string::npos);
  }
  EXPECT_EQ(enumerate_orderings({x, y, z}, 3).size(), 6U);
  EXPECT_THROW(enumerate_orderings({}), LimitError);
}

TEST(LexTiebreak, Examples) {
  EXPECT_EQ(lex_tiebreak({O("y>x"), O("x>y")}), O("x>y"));
  EXPECT_EQ(lex_tiebreak({O("x>z>y"), O("x>y>z"), O("z>x>y")}), O("x>y>z"));
  EXPECT_EQ(lex_tiebreak({O("z>y>x")}), O("z>y>x"));
  EXPECT_THROW(lex_tiebreak({}), Error);
}

TEST(Brown, Triples) {
  const auto s = parse_system("x^4 + y\ny^2*z + 1");
  EXPECT_EQ(brown_triple(s, x), (BrownTriple{4, 4, 1}));
  EXPECT_EQ(brown_triple(s, y), (BrownTriple{2, 3, 2}));
  EXPECT_EQ(brown_triple(s, z), (BrownTriple{1, 3, 1}));
  EXPECT_THROW(brown_triple(s, Variable("w")), Error);
  EXPECT_EQ(brown_triple(parse_system("vars: x, w\nx"), Variable("w")), (BrownTriple{0, 0, 0}));
}

TEST(Brown, TermsCountedPerPolynomial) {
  const auto s = parse_system("x*y + 1\nx*y + 2");
  EXPECT_EQ(brown_triple(s, x).containing_terms, 2U);
}

TEST(Brown, Candidates) {
  EXPECT_EQ(brown_candidates(parse_system("x^4 + y\ny^2*z + 1")), std::vector{O("x>y>z")});
  EXPECT_EQ(brown_candidates(parse_system("x*y + 1")), (std::vector{O("x>y"), O("y>x")}));
  EXPECT_EQ(brown_candidates(parse_system("x^2 + 1")), std::vector{O("x")});
  // x and y tie below z: z goes first in the tuple, the tied pair is free.
  EXPECT_EQ(brown_candidates(parse_system("x + y + z^3")), (std::vector{O("z>x>y"), O("z>y>x")}));
}

TEST(Sotd, Examples) {
  const auto s = parse_system("x^2 + y");
  EXPECT_EQ(sotd_value(full_projection(s, O("y>x"))), 4U);
  EXPECT_EQ(sotd_value(full_projection(s, O("x>y"))), 5U);
  EXPECT_EQ(sotd_value(full_projection(parse_system("x"), O("x"))), 1U);
}

TEST(Ndrr, Examples) {
  const auto s = parse_system("x^2 + y");
  EXPECT_EQ(ndrr_value(full_projection(s, O("y>x"))), 1U);
  EXPECT_EQ(ndrr_value(full_projection(s, O("x>y"))), 1U);
  EXPECT_EQ(ndrr_value(full_projection(parse_system("x^2 + 1"), O("x"))), 0U);
  EXPECT_EQ(ndrr_value(full_projection(parse_system("vars: x, y\nx - 1"), O("y>x"))), 0U);
}

TEST(Choose, Examples) {
  const auto brown = choose(parse_system("x^4 + y\ny^2*z + 1"), Heuristic::Brown);
  EXPECT_EQ(brown.chosen, O("x>y>z"));
  EXPECT_TRUE(brown.per_ordering.empty());
  EXPECT_EQ(brown.triples.size(), 3U);

  const auto s = parse_system("x^2 + y");
  const auto sotd = choose(s, Heuristic::Sotd);
  EXPECT_EQ(sotd.chosen, O("y>x"));
  EXPECT_EQ(sotd.per_ordering.at(O("y>x")), 4U);
  EXPECT_EQ(sotd.per_ordering.at(O("x>y")), 5U);
  EXPECT_EQ(sotd.candidates, std::vector{O("y>x")});

  const auto ndrr = choose(s, Heuristic::Ndrr);
  EXPECT_EQ(ndrr.chosen, O("x>y"));
  EXPECT_EQ(ndrr.candidates, (std::vector{O("x>y"), O("y>x")}));
}

TEST(Choose, AllMatchesIndividual) {
  const auto s = parse_system("x^2 + y*z - 1\nx*y - z^2");
  const auto all = choose_all(s);
  for (auto h : kAllHeuristics) {
    const auto single = choose(s, h);
    EXPECT_EQ(all.at(h).chosen, single.chosen);
    EXPECT_EQ(all.at(h).candidates, single.candidates);
    EXPECT_EQ(all.at(h).per_ordering, single.per_ordering);
  }
}

TEST(Choose, CapAppliesToProjectionHeuristics) {
  const auto s = parse_system("a + b + c + d");
  EXPECT_THROW(choose(s, Heuristic::Sotd, 3), LimitError);
  EXPECT_NO_THROW(choose(s, Heuristic::Brown, 3));
}

TEST(HeuristicName, RoundTrip) {
  for (auto h : kAllHeuristics) EXPECT_EQ(parse_heuristic(to_string(h)), h);
  EXPECT_FALSE(parse_heuristic("greedy").has_value());
}

TEST(BrownProperties, CandidatesArePermutations) {
  std::mt19937_64 rng(51);
  const std::vector<Variable> vars{x, y, z};
  for (int i = 0; i < 100; ++i) {
    const auto s = make_system(vars, {testing::random_in(rng, vars, y, 4, 4)});
    const auto cands = brown_candidates(s);
    ASSERT_FALSE(cands.empty());
    for (const auto& c : cands) EXPECT_TRUE(c.is_permutation_of(vars));
    EXPECT_TRUE(std::is_sorted(cands.begin(), cands.end()));
  }
}

}  // namespace
}  // namespace cadorder
