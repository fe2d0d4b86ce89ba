#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "omc/arrangement.hpp"
#include "omc/committees.hpp"
#include "omc/farey.hpp"
#include "oracles.hpp"

namespace omc {
namespace {

using testing::error_kind;

std::vector<SignVector> sv(std::initializer_list<const char*> items) {
  std::vector<SignVector> v;
  for (const char* s : items) v.push_back(SignVector::parse(s));
  return v;
}

ToposSystem arrangement(std::initializer_list<std::pair<int, int>> vs) {
  std::vector<RationalVector> rows;
  for (auto [x, y] : vs) rows.push_back({Rational(x), Rational(y)});
  return from_central_arrangement(Arrangement::make(std::move(rows)));
}

const ToposSystem& triangle() {
  static const ToposSystem sys = arrangement({{1, 0}, {-1, 1}, {-1, -1}});
  return sys;
}

const ToposSystem& fourlines() {
  static const ToposSystem sys = arrangement({{1, 0}, {0, 1}, {-1, 1}, {-1, -1}});
  return sys;
}

const ToposSystem& quadrants() {
  static const ToposSystem sys = parse_topes("++\n+-\n-+\n--\n");
  return sys;
}

std::vector<SignVector> members_of(const ToposSystem& sys, std::uint64_t mask) {
  std::vector<SignVector> out;
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (mask >> i & 1U) out.push_back(sys.topes()[i]);
  return out;
}

// Committee test written directly from the definition.
bool naive_committee(const std::vector<SignVector>& k) {
  if (k.empty()) return false;
  for (std::size_t e = 0; e < k.front().size(); ++e) {
    std::size_t plus = 0;
    for (const auto& v : k) plus += v.is_plus(e) ? 1 : 0;
    if (2 * plus <= k.size()) return false;
  }
  return true;
}

bool subset_of(const Committee& a, const Committee& b) { return (a.mask() & b.mask()) == a.mask(); }

TEST(IsCommittee, TriangleExamples) {
  EXPECT_TRUE(is_committee(triangle(), sv({"++-", "+-+", "-++"})));
  EXPECT_FALSE(is_committee(triangle(), sv({"++-", "+-+", "+--"})));
  EXPECT_TRUE(is_committee_threshold(triangle(), sv({"++-", "+-+", "-++"})));
  EXPECT_TRUE(is_committee(quadrants(), sv({"++"})));
}

TEST(IsCommittee, RejectsBadInput) {
  EXPECT_EQ(error_kind([] { is_committee(triangle(), {}); }), ErrorKind::Domain);
  EXPECT_EQ(error_kind([] { is_committee(triangle(), sv({"+++"})); }), ErrorKind::Domain);
  EXPECT_EQ(error_kind([] { is_committee(triangle(), sv({"++-", "++-"})); }), ErrorKind::Domain);
  EXPECT_EQ(error_kind([] { make_committee(triangle(), sv({"++-", "+-+"})); }), ErrorKind::Domain);
}

TEST(IsCommittee, EvenTieIsNotACommittee) {
  // counts (1,1) against size 2 on the quadrants
  EXPECT_FALSE(is_committee(quadrants(), sv({"++", "--"})));
  EXPECT_FALSE(is_committee(quadrants(), sv({"+-", "-+"})));
}

// Majority, threshold and the filter-formula reading agree on every subset.
TEST(IsCommittee, ThreeFormsAgreeExhaustively) {
  for (const ToposSystem* sys : {&triangle(), &fourlines(), &quadrants()}) {
    const TopeIndex index(*sys);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << sys->size()); ++mask) {
      const auto members = members_of(*sys, mask);
      const bool majority = is_committee(*sys, members);
      EXPECT_EQ(majority, naive_committee(members));
      EXPECT_EQ(majority, is_committee_threshold(*sys, members));
      bool filter = true;
      const int threshold = static_cast<int>(members.size() + 2) / 2;
      for (std::size_t e = 0; e < sys->ground_size(); ++e)
        filter = filter && testing::contains_subset_of_size(mask, index.halfspace(e), threshold);
      EXPECT_EQ(majority, filter) << mask;
    }
  }
}

TEST(EnumerateLayer, TriangleExamples) {
  const auto three = enumerate_layer(triangle(), 3);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0].str(), "++-,+-+,-++");
  EXPECT_TRUE(enumerate_layer(triangle(), 2).empty());
  EXPECT_TRUE(enumerate_layer(triangle(), 4, {.no_opposites = true}).empty());
  EXPECT_EQ(error_kind([] { enumerate_layer(triangle(), 0); }), ErrorKind::Domain);
  EXPECT_EQ(error_kind([] { enumerate_layer(triangle(), 7); }), ErrorKind::Domain);
}

TEST(EnumerateLayer, SortedAndComplete) {
  for (const ToposSystem* sys : {&triangle(), &fourlines(), &quadrants()}) {
    for (std::size_t k = 1; k <= sys->size(); ++k) {
      for (bool no_opp : {false, true}) {
        const auto layer = enumerate_layer(*sys, k, {.no_opposites = no_opp});
        for (std::size_t i = 1; i < layer.size(); ++i) EXPECT_LT(layer[i - 1], layer[i]);
        std::size_t expected = 0;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << sys->size()); ++mask) {
          const auto members = members_of(*sys, mask);
          if (members.size() != k || !naive_committee(members)) continue;
          if (no_opp && make_committee(*sys, members).has_opposite_pair()) continue;
          ++expected;
        }
        EXPECT_EQ(layer.size(), expected);
        for (const auto& c : layer) {
          EXPECT_EQ(c.size(), k);
          if (no_opp) EXPECT_FALSE(c.has_opposite_pair());
        }
      }
    }
  }
}

TEST(EnumerateAll, TriangleHasOneCommittee) {
  const auto family = enumerate_all(triangle());
  EXPECT_EQ(family.total(), 1u);
  EXPECT_EQ(family.layers.at(3).size(), 1u);
}

TEST(EnumerateAll, AcyclicQuadrantsHaveASingleton) {
  const auto family = enumerate_all(quadrants());
  ASSERT_EQ(family.layers.at(1).size(), 1u);
  EXPECT_EQ(family.layers.at(1)[0].str(), "++");
}

TEST(EnumerateAll, FourLineLayerBounds) {
  const std::size_t t = fourlines().size();
  EXPECT_EQ(t, 8u);
  for (const auto& c : enumerate_all(fourlines()).all()) {
    EXPECT_GE(c.size(), 3u);
    EXPECT_LE(c.size(), t - 3);
  }
  for (const auto& c : enumerate_all(fourlines(), {.no_opposites = true}).all()) {
    EXPECT_GE(c.size(), 3u);
    EXPECT_LE(c.size(), t / 2);
  }
}

TEST(EnumerateAll, Guard) {
  std::vector<RationalVector> rows;
  for (int i = 0; i < 13; ++i) rows.push_back({Rational(1), Rational(i)});
  const auto big = from_central_arrangement(Arrangement::make(rows));
  EXPECT_EQ(big.size(), 26u);
  EXPECT_EQ(error_kind([&] { enumerate_all(big); }), ErrorKind::ResourceGuard);
}

TEST(MinimalCommittees, Triangle) {
  const auto minimal = minimal_committees(triangle());
  EXPECT_TRUE(minimal.minimal);
  ASSERT_EQ(minimal.total(), 1u);
  EXPECT_EQ(minimal.all()[0].str(), "++-,+-+,-++");
  const auto minimum = minimum_committees(triangle());
  ASSERT_EQ(minimum.size(), 1u);
  EXPECT_EQ(minimum[0].size(), 3u);
}

TEST(MinimalCommittees, AntichainAndOppositeFree) {
  for (const ToposSystem* sys : {&triangle(), &fourlines(), &quadrants()}) {
    const auto all = enumerate_all(*sys).all();
    const auto minimal = minimal_committees(*sys).all();
    for (const auto& c : minimal) EXPECT_FALSE(c.has_opposite_pair()) << c.str();
    // Exactly the committees containing no other committee.
    std::set<std::string> expected;
    for (const auto& c : all) {
      bool has_smaller = false;
      for (const auto& d : all) has_smaller = has_smaller || (d.mask() != c.mask() && subset_of(d, c));
      if (!has_smaller) expected.insert(c.str());
    }
    std::set<std::string> got;
    for (const auto& c : minimal) got.insert(c.str());
    EXPECT_EQ(got, expected);
  }
}

TEST(FractionSignature, Examples) {
  const auto k = make_committee(triangle(), sv({"++-", "+-+", "-++"}));
  for (std::size_t e = 1; e <= 3; ++e) EXPECT_EQ(fraction_signature(triangle(), k, e), kTwoThirds);
  const auto single = make_committee(quadrants(), sv({"++"}));
  EXPECT_EQ(fraction_signature(quadrants(), single, 1), kOne);
  EXPECT_EQ(error_kind([&] { fraction_signature(triangle(), k, 4); }), ErrorKind::Domain);
}

TEST(FractionSignature, LiesInBooleanFarey) {
  for (const ToposSystem* sys : {&triangle(), &fourlines()}) {
    const int t = static_cast<int>(sys->size());
    const auto boolean = farey_boolean(t, t / 2);
    const auto standard = farey_sequence(t / 2);
    for (const auto& c : enumerate_all(*sys).all()) {
      for (std::size_t e = 1; e <= sys->ground_size(); ++e) {
        const Fraction f = fraction_signature(*sys, c, e);
        EXPECT_GT(f, kHalf);
        EXPECT_TRUE(boolean.contains(f)) << f;
        if (!c.has_opposite_pair()) EXPECT_TRUE(standard.contains(f)) << f;
      }
    }
  }
}

TEST(Closure, TriangleAugmentationAlwaysCollides) {
  const auto k = make_committee(triangle(), sv({"++-", "+-+", "-++"}));
  for (const auto& v : triangle().topes())
    EXPECT_EQ(error_kind([&] { augment_with_opposite_pair(triangle(), k, v); }), ErrorKind::Domain) << v;
}

TEST(Closure, AugmentationOnFourLines) {
  std::size_t cases = 0;
  for (const auto& k : enumerate_all(fourlines()).all()) {
    for (const auto& v : fourlines().topes()) {
      const TopeIndex index(fourlines());
      const auto i = *fourlines().index_of(v);
      if ((k.mask() >> i & 1U) || (k.mask() >> index.opposite_of(i) & 1U)) continue;
      const auto grown = augment_with_opposite_pair(fourlines(), k, v);
      EXPECT_EQ(grown.size(), k.size() + 2);
      EXPECT_TRUE(naive_committee(grown.members()));
      ++cases;
    }
  }
  EXPECT_GT(cases, 0u);
}

TEST(Closure, DisjointUnion) {
  std::size_t cases = 0;
  for (const ToposSystem* sys : {&triangle(), &fourlines()}) {
    const auto all = enumerate_all(*sys).all();
    for (const auto& a : all)
      for (const auto& b : all) {
        if (a.mask() & b.mask()) {
          EXPECT_EQ(error_kind([&] { union_committees(*sys, a, b); }), ErrorKind::Domain);
          continue;
        }
        const auto u = union_committees(*sys, a, b);
        for (std::size_t e = 0; e < sys->ground_size(); ++e) EXPECT_EQ(u.counts()[e], a.counts()[e] + b.counts()[e]);
        ++cases;
      }
  }
  // Neither desk instance has two disjoint committees; exercised below.
  EXPECT_EQ(cases, 0u);
}

// Random sign patterns closed under negation, on a larger ground set:
// augmentation and disjoint union keep strict majorities.
TEST(Closure, RandomSystems) {
  std::mt19937 rng(5);
  int checked_unions = 0, checked_augments = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<RationalVector> rows;
    std::uniform_int_distribution<int> c(-6, 6);
    for (int i = 0; i < 4; ++i) rows.push_back({Rational(c(rng)), Rational(c(rng)), Rational(c(rng))});
    std::optional<ToposSystem> sys;
    try {
      sys = from_central_arrangement(Arrangement::make(rows));
    } catch (const Error&) {
      continue;
    }
    if (sys->size() > 20) continue;
    const auto all = enumerate_all(*sys).all();
    const TopeIndex index(*sys);
    for (std::size_t a = 0; a < all.size() && a < 30; ++a) {
      for (std::size_t b = a + 1; b < all.size() && b < 30; ++b)
        if ((all[a].mask() & all[b].mask()) == 0) {
          EXPECT_TRUE(naive_committee(union_committees(*sys, all[a], all[b]).members()));
          ++checked_unions;
        }
      for (std::size_t i = 0; i < sys->size(); ++i) {
        const std::size_t j = index.opposite_of(i);
        if ((all[a].mask() >> i & 1U) || (all[a].mask() >> j & 1U)) continue;
        EXPECT_TRUE(naive_committee(augment_with_opposite_pair(*sys, all[a], sys->topes()[i]).members()));
        ++checked_augments;
      }
    }
  }
  EXPECT_GT(checked_augments, 0);
  EXPECT_GT(checked_unions, 0);
}

TEST(Decompositions, Triangle) {
  EXPECT_EQ(verify_layer_decomposition(triangle()).verdict(), Verdict::Pass);
  EXPECT_EQ(verify_opposite_free_decomposition(triangle()).verdict(), Verdict::Pass);
}

TEST(Decompositions, FourLines) {
  const auto prop = verify_layer_decomposition(fourlines());
  EXPECT_TRUE(prop.passed()) << prop;
  const auto free = verify_opposite_free_decomposition(fourlines());
  EXPECT_TRUE(free.passed()) << free;
}

TEST(Decompositions, AcyclicIsSkipped) {
  const auto r = verify_layer_decomposition(quadrants());
  EXPECT_EQ(r.verdict(), Verdict::SkippedHypothesis);
  EXPECT_EQ(verify_opposite_free_decomposition(quadrants()).verdict(), Verdict::SkippedHypothesis);
}

// Non-acyclic planar and spatial arrangements: both verifiers pass.
TEST(Decompositions, RandomNonAcyclicArrangements) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> c(-5, 5);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 12; ++trial) {
    const int dim = 2 + trial % 2;
    const int t = dim == 2 ? 3 + trial % 4 : 4;
    std::vector<RationalVector> rows;
    for (int i = 0; i < t; ++i) {
      RationalVector r;
      for (int d = 0; d < dim; ++d) r.emplace_back(c(rng));
      rows.push_back(r);
    }
    std::optional<ToposSystem> sys;
    try {
      sys = from_central_arrangement(Arrangement::make(rows));
    } catch (const Error&) {
      continue;
    }
    if (is_acyclic(*sys) || sys->size() > 16) continue;
    const auto a = verify_layer_decomposition(*sys);
    EXPECT_TRUE(a.passed()) << serialize_topes(*sys) << a;
    const auto b = verify_opposite_free_decomposition(*sys);
    EXPECT_TRUE(b.passed()) << serialize_topes(*sys) << b;
    ++tested;
  }
  EXPECT_GE(tested, 5);
}

}  // namespace
}  // namespace omc
