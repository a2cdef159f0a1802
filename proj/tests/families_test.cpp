#include <gtest/gtest.h>

#include "corpus.hpp"
#include "ibox/family.hpp"
#include "oracle.hpp"

using namespace ibox;
using ibox::testing::word;

namespace {

Family from(const SequencePtr& s, const char* text) {
  return Family::from_chain(AdmissibleChain(s, ChainSpec::parse(text)));
}

}  // namespace

TEST(Family, FromChainEfe) {
  const auto s = word({1, 2, 1});
  const Family f = from(s, "1;RR");
  EXPECT_EQ(f.sorted_boxes(), (std::vector<IBox>{{1, 1}, {1, 3}, {2, 2}}));
  EXPECT_EQ(f.stored_efe({1, 1}), 1);
  EXPECT_EQ(f.stored_efe({2, 2}), 2);
  EXPECT_EQ(f.stored_efe({1, 3}), 3);
  const Family g = from(s, "2;RL");
  EXPECT_EQ(g.stored_efe({2, 2}), 2);
  EXPECT_EQ(g.stored_efe({3, 3}), 3);
  EXPECT_EQ(g.stored_efe({1, 3}), 1);
  EXPECT_EQ(g.box_with_efe(1), (IBox{1, 3}));
  const Family one = from(word({2}), "1");
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.stored_efe({1, 1}), 1);
}

TEST(Family, EffectiveEndCriterion) {
  const auto s = word({1, 2, 1});
  EXPECT_EQ(effective_end(from(s, "1;RR"), {1, 3}), 3);
  EXPECT_EQ(effective_end(from(s, "1;RR"), {2, 2}), 2);
  EXPECT_EQ(effective_end(from(s, "2;RL"), {1, 3}), 1);
  EXPECT_THROW(effective_end(from(s, "1;RR"), {3, 3}), std::invalid_argument);
}

TEST(Family, CommutingAndMaximal) {
  const auto s = word({1, 2, 1});
  const std::vector<IBox> full{{1, 1}, {2, 2}, {1, 3}};
  const std::vector<IBox> part{{1, 1}, {2, 2}};
  EXPECT_TRUE(is_maximal(*s, {1, 3}, full));
  EXPECT_TRUE(is_commuting(*s, part));
  EXPECT_FALSE(is_maximal(*s, {1, 3}, part));
  const std::vector<IBox> clash{{1, 1}, {3, 3}};
  EXPECT_FALSE(is_commuting(*s, clash));
  EXPECT_THROW(Family::from_boxes(s, {1, 3}, part), ChainError);
}

TEST(Family, ColorFiber) {
  const auto s = word({1, 2, 1});
  const Family g = from(s, "2;RL");
  EXPECT_EQ(color_fiber(g, 0).boxes, (std::vector<IBox>{{3, 3}, {1, 3}}));
  EXPECT_EQ(color_fiber(g, 1).boxes, (std::vector<IBox>{{2, 2}}));
  const Family plus = from(word({1, 2, 1, 2, 1, 2}), "1;RRRRR");
  EXPECT_EQ(color_fiber(plus, 0).boxes, (std::vector<IBox>{{1, 1}, {1, 3}, {1, 5}}));
  EXPECT_THROW(color_fiber(from(word({1, 1}), "1;R"), 1), std::invalid_argument);
}

TEST(Family, Corners) {
  const auto s = word({1, 2, 1});
  const Family f = from(s, "1;RR");
  EXPECT_FALSE(is_right_corner(f, {1, 1}));
  EXPECT_FALSE(is_left_corner(f, {1, 1}));
  const Family one = from(word({1}), "1");
  EXPECT_FALSE(is_right_corner(one, {1, 1}));
  EXPECT_FALSE(is_left_corner(one, {1, 1}));
  // (1,1,1,1) with [2,3] left of [1,3] and below [2,4]
  const auto w = word({1, 1, 1, 1});
  const Family g = Family::from_boxes(w, {1, 4}, {{3, 3}, {2, 3}, {2, 4}, {1, 4}});
  EXPECT_TRUE(is_left_corner(g, {2, 3}));
  EXPECT_FALSE(is_right_corner(g, {2, 3}));
  const Family h = Family::from_boxes(w, {1, 4}, {{2, 2}, {2, 3}, {1, 3}, {1, 4}});
  EXPECT_TRUE(is_right_corner(h, {2, 3}));
}

TEST(Family, Partition) {
  const auto s = word({1, 2, 1});
  const Partition p = partition(from(s, "1;RR"));
  EXPECT_EQ(p.frozen, (std::vector<IBox>{{2, 2}, {1, 3}}));
  EXPECT_EQ(p.exchangeable, (std::vector<IBox>{{1, 1}}));
  const Partition q = partition(from(s, "2;RL"));
  EXPECT_EQ(q.frozen, (std::vector<IBox>{{1, 3}, {2, 2}}));
  EXPECT_EQ(q.exchangeable, (std::vector<IBox>{{3, 3}}));
  const Partition r = partition(from(word({1, 1}), "1;R"));
  EXPECT_EQ(r.frozen, (std::vector<IBox>{{1, 2}}));
  EXPECT_EQ(r.exchangeable, (std::vector<IBox>{{1, 1}}));
}

TEST(Family, EnumerateExamples) {
  const auto fams = enumerate_maximal_families(word({1, 2, 1}), {1, 3});
  ASSERT_EQ(fams.size(), 2u);
  // first chain in word order is 3;LL
  EXPECT_EQ(fams[0].sorted_boxes(), (std::vector<IBox>{{1, 3}, {2, 2}, {3, 3}}));
  EXPECT_EQ(fams[1].sorted_boxes(), (std::vector<IBox>{{1, 1}, {1, 3}, {2, 2}}));
  EXPECT_EQ(enumerate_maximal_families(word({1}), {1, 1}).size(), 1u);
  const auto two = enumerate_maximal_families(word({1, 2}), {1, 2});
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].sorted_boxes(), (std::vector<IBox>{{1, 1}, {2, 2}}));
}

// Chain enumeration and Bron-Kerbosch on the commutation graph give the
// same maximal families, on the full support and on every sub-interval.
TEST(Family, EnumerationMatchesCliques) {
  for (const auto& k : ibox::testing::corpus(5)) {
    const ColorSequence& s = *k.seq;
    for (Position a = s.lo(); a <= s.hi(); ++a) {
      for (Position b = a; b <= s.hi(); ++b) {
        std::vector<std::vector<IBox>> got;
        for (const Family& f : enumerate_maximal_families(k.seq, {a, b})) got.push_back(f.sorted_boxes());
        std::sort(got.begin(), got.end());
        ASSERT_EQ(got, oracle::maximal_families(s, {a, b})) << k.label() << " on [" << a << "," << b << "]";
      }
    }
  }
}

// Stored (envelope) effective ends against the membership criterion.
TEST(Family, EfeTwoRoutes) {
  for (const auto& k : ibox::testing::corpus(6)) {
    for (const Family& f : enumerate_maximal_families(k.seq, k.seq->support())) {
      const oracle::BoxSet set{k.seq.get(), f.range(), {f.boxes().begin(), f.boxes().end()}};
      for (std::size_t i = 0; i < f.size(); ++i) {
        ASSERT_EQ(f.efe(i), set.efe(f.box(i))) << k.label() << " " << f.box(i);
        ASSERT_EQ(effective_end(f, f.box(i)), f.efe(i));
        ASSERT_EQ(f.is_frozen(i), set.frozen(f.box(i)));
      }
    }
  }
}
