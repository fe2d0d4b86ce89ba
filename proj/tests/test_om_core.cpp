#include <gtest/gtest.h>

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "omc/arrangement.hpp"
#include "omc/sign_vector.hpp"
#include "omc/topes.hpp"
#include "oracles.hpp"

namespace omc {
namespace {

using testing::error_kind;

std::vector<std::string> strs(const std::vector<SignVector>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

std::vector<std::string> strs(const ToposSystem& sys) { return strs(sys.topes()); }

RationalVector vec(std::initializer_list<int> c) {
  RationalVector v;
  for (int x : c) v.emplace_back(x);
  return v;
}

ToposSystem from_vectors(std::vector<RationalVector> vs) {
  return from_central_arrangement(Arrangement::make(std::move(vs)));
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const std::vector<std::string> kTriangle{"++-", "+-+", "+--", "-++", "-+-", "--+"};

TEST(SignVector, ParseAndOpposite) {
  const auto v = SignVector::parse("++-");
  EXPECT_EQ(v.size(), 3u);
  EXPECT_TRUE(v.is_plus(0));
  EXPECT_FALSE(v.is_plus(2));
  EXPECT_EQ(v[2], Sign::Minus);
  EXPECT_EQ(opposite(v).str(), "--+");
  EXPECT_EQ(opposite(opposite(v)), v);
  EXPECT_EQ(error_kind([] { SignVector::parse("+0-"); }), ErrorKind::Invariant);
  EXPECT_EQ(error_kind([] { SignVector::parse(""); }), ErrorKind::Invariant);
}

TEST(SignVector, OrderMatchesText) {
  std::vector<std::string> all;
  for (int mask = 0; mask < 16; ++mask) all.push_back(SignVector(4, static_cast<std::uint64_t>(mask)).str());
  for (const auto& a : all)
    for (const auto& b : all) EXPECT_EQ(SignVector::parse(a) < SignVector::parse(b), a < b) << a << " " << b;
}

TEST(ParseTopes, TriangleLines) {
  const auto sys = parse_topes("++-\n+-+\n-++\n--+\n-+-\n+--\n");
  EXPECT_EQ(sys.ground_size(), 3u);
  EXPECT_EQ(strs(sys), kTriangle);
}

TEST(ParseTopes, CommentsAndBlankLines) {
  const auto sys = parse_topes("# quadrants\n\n  ++  \n+-   # trailing\n-+\n--\n");
  EXPECT_EQ(sys.size(), 4u);
}

TEST(ParseTopes, ParallelColumns) {
  const auto msg = message_of([] { parse_topes("++\n--\n"); });
  EXPECT_NE(msg.find("columns 1 and 2 are parallel"), std::string::npos) << msg;
  EXPECT_EQ(error_kind([] { parse_topes("++\n--\n"); }), ErrorKind::Invariant);
}

TEST(ParseTopes, AntiparallelColumns) {
  const auto msg = message_of([] { parse_topes("+-\n-+\n"); });
  EXPECT_NE(msg.find("antiparallel"), std::string::npos) << msg;
}

TEST(ParseTopes, NotNegationClosedNamesOrphan) {
  const auto msg = message_of([] { parse_topes("++\n+-\n"); });
  EXPECT_NE(msg.find("not negation-closed"), std::string::npos) << msg;
  EXPECT_NE(msg.find("--"), std::string::npos) << msg;
}

TEST(ParseTopes, LineNumbersInErrors) {
  const auto msg = message_of([] { parse_topes("++\n+x\n"); });
  EXPECT_EQ(msg.rfind("line 2:", 0), 0u) << msg;
  const auto ragged = message_of([] { parse_topes("++\n+-+\n"); });
  EXPECT_EQ(ragged.rfind("line 2:", 0), 0u) << ragged;
  EXPECT_EQ(error_kind([] { parse_topes("# nothing\n"); }), ErrorKind::Invariant);
  EXPECT_EQ(error_kind([] { parse_topes("++\n++\n--\n"); }), ErrorKind::Invariant);
}

TEST(ToposSystem, MakeChecksLengths) {
  std::vector<SignVector> topes;
  for (const char* s : {"++-", "--+", "+-+", "-+-", "-++", "+--"}) topes.push_back(SignVector::parse(s));
  EXPECT_NO_THROW(ToposSystem::make(3, topes));
  EXPECT_EQ(error_kind([&] { ToposSystem::make(4, topes); }), ErrorKind::Invariant);
  EXPECT_EQ(error_kind([] { ToposSystem::make(3, {}); }), ErrorKind::Invariant);
}

TEST(ParseTopes, SerializeRoundTrip) {
  for (const auto& sys : {parse_topes("++\n+-\n-+\n--\n"), from_vectors({vec({1, 0}), vec({-1, 1}), vec({-1, -1})}),
                          from_vectors({vec({1, 0}), vec({-1, 1}), vec({-1, -1}), vec({0, 1})})})
    EXPECT_EQ(parse_topes(serialize_topes(sys)), sys);
}

TEST(Arrangement, TriangleTopes) {
  const auto sys = from_vectors({vec({1, 0}), vec({-1, 1}), vec({-1, -1})});
  EXPECT_EQ(strs(sys), kTriangle);
  EXPECT_FALSE(sys.contains(SignVector::parse("+++")));
  EXPECT_FALSE(sys.contains(SignVector::parse("---")));
  EXPECT_FALSE(is_acyclic(sys));
}

TEST(Arrangement, TwoIndependentLines) {
  const auto sys = from_vectors({vec({1, 0}), vec({0, 1})});
  EXPECT_EQ(strs(sys), (std::vector<std::string>{"++", "+-", "-+", "--"}));
  EXPECT_TRUE(is_acyclic(sys));
}

TEST(Arrangement, AcyclicThreeLines) {
  const auto sys = from_vectors({vec({1, 0}), vec({0, 1}), vec({1, 1})});
  EXPECT_EQ(sys.size(), 6u);
  EXPECT_TRUE(sys.contains(SignVector::parse("+++")));
  EXPECT_TRUE(is_acyclic(sys));
}

TEST(Arrangement, RejectsDegenerateInput) {
  EXPECT_EQ(error_kind([] { Arrangement::make({vec({0, 0}), vec({1, 0})}); }), ErrorKind::Invariant);
  EXPECT_EQ(error_kind([] { Arrangement::make({vec({1, 2}), vec({-2, -4})}); }), ErrorKind::Invariant);
  EXPECT_EQ(error_kind([] { Arrangement::make({vec({1, 2}), vec({1, 2, 3})}); }), ErrorKind::Invariant);
  EXPECT_EQ(error_kind([] { Arrangement::make({}); }), ErrorKind::Invariant);
}

TEST(Arrangement, ParseFormat) {
  const auto arr = parse_arrangement("dim 2\n# comment\n1 0\n-1/2 1/2\n-3 -3  # scaled\n");
  EXPECT_EQ(arr.size(), 3u);
  EXPECT_EQ(strs(from_central_arrangement(arr)), kTriangle);
  EXPECT_EQ(error_kind([] { parse_arrangement("dim 2\n1 0 0\n"); }), ErrorKind::Invariant);
  EXPECT_EQ(error_kind([] { parse_arrangement("1 a\n"); }), ErrorKind::Invariant);
  EXPECT_EQ(error_kind([] { parse_arrangement("1 1/0\n"); }), ErrorKind::Invariant);
}

TEST(Arrangement, ResourceGuard) {
  std::vector<RationalVector> vs;
  for (int i = 1; i <= 17; ++i) vs.push_back(vec({1, i}));
  EXPECT_EQ(error_kind([&] { from_central_arrangement(Arrangement::make(vs)); }), ErrorKind::ResourceGuard);
}

TEST(StrictFeasibility, SmallSystems) {
  EXPECT_TRUE(strict_system_feasible({vec({1, 0}), vec({0, 1})}));
  EXPECT_FALSE(strict_system_feasible({vec({1, 0}), vec({-1, 0})}));
  EXPECT_FALSE(strict_system_feasible({vec({1, 0}), vec({-1, 1}), vec({-1, -1})}));
  EXPECT_TRUE(strict_system_feasible({vec({1, 1, 0}), vec({-1, 1, 0}), vec({0, -1, 1})}));
  EXPECT_FALSE(strict_system_feasible({vec({1, 1, 1}), vec({-1, 0, 0}), vec({0, -1, 0}), vec({0, 0, -1})}));
}

// Random planar arrangements against angular-sector probing: 2t topes.
TEST(Arrangement, PlanarMatchesSectorProbe) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-9, 9);
  int tested = 0;
  while (tested < 40) {
    const int t = 2 + tested % 6;
    std::vector<RationalVector> vs;
    std::vector<std::pair<double, double>> dv;
    for (int i = 0; i < t; ++i) {
      const int x = coord(rng), y = coord(rng);
      vs.push_back(vec({x, y}));
      dv.emplace_back(x, y);
    }
    std::optional<Arrangement> arr;
    try {
      arr = Arrangement::make(vs);
    } catch (const Error&) {
      continue;  // dependent pair drawn
    }
    const auto sys = from_central_arrangement(*arr);
    EXPECT_EQ(sys.size(), static_cast<std::size_t>(2 * t));
    EXPECT_EQ(strs(sys), testing::planar_regions(dv));
    ++tested;
  }
}

// Four planes in general position in R^3 cut out 2 (C(3,0)+C(3,1)+C(3,2)) = 14 regions.
TEST(Arrangement, GenericSpaceCount) {
  const auto sys = from_vectors({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 1, 1})});
  std::uint64_t expected = 0;
  for (int i = 0; i < 3; ++i) expected += testing::pascal(3, i);
  EXPECT_EQ(sys.size(), 2 * expected);
}

TEST(Arrangement, InvariantUnderPositiveScaling) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> scale(1, 7);
  const std::vector<RationalVector> base{vec({1, 0, 1}), vec({0, 1, -1}), vec({1, 1, 2}), vec({2, -1, 1}),
                                         vec({1, 2, 0})};
  const auto reference = from_vectors(base);
  for (int trial = 0; trial < 20; ++trial) {
    auto scaled = base;
    for (auto& v : scaled) {
      const Rational f(scale(rng), scale(rng));
      for (auto& c : v) c *= f;
    }
    EXPECT_EQ(from_vectors(scaled), reference);
  }
}

TEST(ToposSystem, ArrangementOutputInvariants) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<RationalVector> vs;
    for (int i = 0; i < 5; ++i) vs.push_back(vec({coord(rng), coord(rng), coord(rng)}));
    ToposSystem sys = [&] {
      try {
        return from_vectors(vs);
      } catch (const Error&) {
        return parse_topes("++\n+-\n-+\n--\n");
      }
    }();
    for (const auto& v : sys.topes()) EXPECT_TRUE(sys.contains(opposite(v)));
    for (std::size_t e = 1; e <= sys.ground_size(); ++e) EXPECT_EQ(2 * positive_halfspace(sys, e).size(), sys.size());
  }
}

TEST(PositiveHalfspace, Examples) {
  const auto tri = parse_topes("++-\n+-+\n-++\n--+\n-+-\n+--\n");
  EXPECT_EQ(strs(positive_halfspace(tri, 1)), (std::vector<std::string>{"++-", "+-+", "+--"}));
  const auto quad = parse_topes("++\n+-\n-+\n--\n");
  EXPECT_EQ(strs(positive_halfspace(quad, 2)), (std::vector<std::string>{"++", "-+"}));
  EXPECT_TRUE(is_acyclic(quad));
  EXPECT_EQ(error_kind([&] { positive_halfspace(quad, 0); }), ErrorKind::Domain);
  EXPECT_EQ(error_kind([&] { positive_halfspace(quad, 3); }), ErrorKind::Domain);
}

TEST(Vote, Classification) {
  using enum Sign;
  const std::vector<Sign> a{Plus, Minus, Minus}, b{Plus, Plus, Minus}, tie{Plus, Minus};
  EXPECT_EQ(classify_vote(a), Vote::ClassA);
  EXPECT_EQ(classify_vote(b), Vote::ClassB);
  EXPECT_EQ(classify_vote(tie), Vote::Tie);
  EXPECT_EQ(error_kind([] { classify_vote(std::span<const Sign>{}); }), ErrorKind::Domain);
}

}  // namespace
}  // namespace omc
