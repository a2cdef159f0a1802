#include <gtest/gtest.h>

#include <set>

#include "corpus.hpp"
#include "ibox/exchange.hpp"
#include "oracle.hpp"

using namespace ibox;
using ibox::testing::word;

namespace {

Family from(const SequencePtr& s, const char* text) {
  return Family::from_chain(AdmissibleChain(s, ChainSpec::parse(text)));
}

const CartanMatrix& A2() { return ibox::testing::cartan_for("A2"); }
const CartanMatrix& G2() { return ibox::testing::cartan_for("G2"); }

std::set<std::tuple<IBox, IBox, int>> arrows(const Quiver& q) {
  std::set<std::tuple<IBox, IBox, int>> out;
  for (const auto& a : q.arrows) out.emplace(q.vertices[a.source].box, q.vertices[a.target].box, a.weight);
  return out;
}

}  // namespace

TEST(Exchange, PositiveEntryExamples) {
  const auto s = word({1, 2, 1});
  const Family plus = from(s, "1;RR");
  const auto h = positive_entry(plus, A2(), {1, 3}, {1, 1});
  EXPECT_EQ(h.value, 1);
  EXPECT_EQ(h.tag, EntryTag::Horizontal);
  const auto a = positive_entry(plus, A2(), {1, 1}, {2, 2});
  EXPECT_EQ(a.value, 1);
  EXPECT_EQ(a.tag, EntryTag::A);
  const Family g = from(word({1, 2, 1, 2, 1, 2}), "1;RRRRR");
  const auto b = positive_entry(g, G2(), {2, 2}, {1, 3});
  EXPECT_EQ(b.value, 3);
  EXPECT_EQ(b.tag, EntryTag::B);
  EXPECT_THROW(positive_entry(plus, A2(), {3, 3}, {1, 1}), std::invalid_argument);
}

TEST(Exchange, MatrixExamples) {
  const auto s = word({1, 2, 1});
  const ExchangeMatrix plus = exchange_matrix(from(s, "1;RR"), A2());
  EXPECT_EQ(plus.at(IBox{2, 2}, IBox{1, 1}), -1);
  EXPECT_EQ(plus.at(IBox{1, 3}, IBox{1, 1}), 1);
  const Family fp = from(s, "2;RL");
  const ExchangeMatrix prime = exchange_matrix(fp, A2());
  EXPECT_EQ(prime.at(IBox{2, 2}, IBox{3, 3}), 1);
  EXPECT_EQ(positive_entry(fp, A2(), {2, 2}, {3, 3}).tag, EntryTag::C);
  EXPECT_EQ(prime.at(IBox{1, 3}, IBox{3, 3}), -1);
  // efe order: [1,3] (1), [2,2] (2), [3,3] (3)
  EXPECT_EQ(prime.tilde(), (std::vector<std::vector<int>>{{-1}, {1}, {0}}));

  const ExchangeMatrix one = exchange_matrix(from(word({1}), "1"), A2());
  EXPECT_TRUE(one.exchangeable().empty());
  EXPECT_EQ(one.at(0, 0), 0);
}

TEST(Exchange, MutateExamples) {
  const auto s = word({1, 2, 1});
  const ExchangeMatrix prime = exchange_matrix(from(s, "2;RL"), A2());
  const ExchangeMatrix mu = mutate(prime, {3, 3});
  EXPECT_EQ(mu.at(IBox{2, 2}, IBox{3, 3}), -1);
  EXPECT_EQ(mu.at(IBox{1, 3}, IBox{3, 3}), 1);
  EXPECT_EQ(mutate(mu, {3, 3}), prime);
  EXPECT_THROW(mutate(prime, {1, 3}), std::invalid_argument);
  EXPECT_THROW(mutate(prime, {1, 1}), std::invalid_argument);
}

TEST(Exchange, MutateCrafted) {
  // rows s, k, t; s frozen
  const ExchangeMatrix m({{1, 1}, {2, 2}, {3, 3}}, {0, 0, 0}, {1, 1, 1}, {true, false, false},
                         {0, 1, 0, -1, 0, 2, 0, -2, 0});
  const ExchangeMatrix mu = mutate(m, {2, 2});
  EXPECT_EQ(mu.at(0, 2), 2);
  EXPECT_EQ(mu.at(0, 1), -1);
  EXPECT_EQ(mu.at(1, 2), -2);
  EXPECT_EQ(mu.tilde(), (std::vector<std::vector<int>>{{-1, 2}, {0, -2}, {2, 0}}));
}

TEST(Exchange, QuiverExamples) {
  const auto s = word({1, 2, 1});
  const Quiver plus = quiver(exchange_matrix(from(s, "1;RR"), A2()));
  const auto got = arrows(plus);
  EXPECT_TRUE(got.count({IBox{1, 3}, IBox{1, 1}, 1}));
  EXPECT_TRUE(got.count({IBox{1, 1}, IBox{2, 2}, 1}));
  const Quiver g = quiver(exchange_matrix(from(word({1, 2, 1, 2, 1, 2}), "1;RRRRR"), G2()));
  bool three = false;
  for (const auto& a : g.arrows) three = three || a.weight == 3;
  EXPECT_TRUE(three);
  EXPECT_NE(to_dot(g).find("label=\"3\""), std::string::npos);
  const Quiver one = quiver(exchange_matrix(from(word({1}), "1"), A2()));
  EXPECT_TRUE(one.arrows.empty());
  ASSERT_EQ(one.vertices.size(), 1u);
  EXPECT_TRUE(one.vertices[0].frozen);
}

TEST(Exchange, DotIsDeterministic) {
  const auto s = word({1, 2, 1});
  const auto m = exchange_matrix(from(s, "2;RL"), A2());
  const std::string dot = to_dot(quiver(m), A2().labels());
  EXPECT_EQ(dot, to_dot(quiver(m), A2().labels()));
  EXPECT_EQ(dot,
            "digraph Q {\n"
            "  v0 [label=\"[1,3] 1\", shape=box];\n"
            "  v1 [label=\"[2,2] 2\", shape=box];\n"
            "  v2 [label=\"[3,3] 1\", shape=ellipse];\n"
            "  v1 -> v2 [label=\"1\", style=dashed];\n"
            "  v2 -> v0 [label=\"1\"];\n"
            "}\n");
}

// Full matrices against the defining cases evaluated from scratch, plus the
// structural laws, over every family of the corpus.
TEST(Exchange, MatchesOracleOverCorpus) {
  for (const auto& k : ibox::testing::corpus(6)) {
    const CartanMatrix& c = *k.cartan;
    for (const Family& f : enumerate_maximal_families(k.seq, k.seq->support())) {
      const ExchangeMatrix m = exchange_matrix(f, c);
      const std::vector<IBox> order(f.boxes().begin(), f.boxes().end());
      const oracle::BoxSet set{k.seq.get(), f.range(), {order.begin(), order.end()}};
      const auto want = oracle::matrix(set, c, order);
      for (std::size_t s = 0; s < order.size(); ++s) {
        for (std::size_t t = 0; t < order.size(); ++t) {
          ASSERT_EQ(m.at(s, t), want[s][t]) << k.label() << " " << order[s] << " " << order[t];
          ASSERT_LE(vertical_conditions(f, order[s], order[t]).count(), 4);
        }
      }
      ASSERT_TRUE(is_skew_symmetrizable(m));
      for (std::size_t col : m.exchangeable()) {
        ASSERT_EQ(mutate(mutate(m, m.box(col)), m.box(col)), m);
        const auto mu = oracle::mutate(want, col);
        const ExchangeMatrix got = mutate(m, m.box(col));
        for (std::size_t s = 0; s < order.size(); ++s) {
          for (std::size_t t = 0; t < order.size(); ++t) ASSERT_EQ(got.at(s, t), mu[s][t]);
        }
      }
    }
  }
}
