#include "krev/canonical.hpp"
#include "krev/free_trees.hpp"
#include "krev/prufer.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

namespace krev {
namespace {

std::size_t count_trees(int n) {
  FreeTreeEnumerator e(n);
  std::size_t c = 0;
  while (e.next()) ++c;
  return c;
}

std::multiset<CanonicalCode> codes_of(const std::vector<Graph> &trees) {
  std::multiset<CanonicalCode> out;
  for (const auto &t : trees) out.insert(canonical_code(t));
  return out;
}

TEST(CanonicalCode, RelabeledPathsAgree) {
  auto p3 = test::path_graph(3);
  auto centred_at_first = Graph(3, {{1, 0}, {0, 2}});
  EXPECT_EQ(canonical_code(p3), canonical_code(centred_at_first));
}

TEST(CanonicalCode, StarAndPathDiffer) {
  EXPECT_NE(canonical_code(test::star_graph(3)), canonical_code(test::path_graph(4)));
}

TEST(CanonicalCode, SingleVertexAndEdge) {
  EXPECT_EQ(canonical_code(Graph(1, {})).hex(), "00");
  EXPECT_EQ(canonical_code(Graph(2, {{0, 1}})).hex(), "0001");
}

TEST(CanonicalCode, RejectsNonTrees) {
  EXPECT_THROW(canonical_code(test::graph1(3, {{1, 2}, {2, 3}, {1, 3}})), std::invalid_argument);
  EXPECT_THROW(canonical_code(test::graph1(4, {{1, 2}, {3, 4}})), std::invalid_argument);
}

TEST(CanonicalCode, HexRoundTrip) {
  auto code = canonical_code(test::family8_t1());
  EXPECT_EQ(CanonicalCode::from_hex(code.hex()), code);
  EXPECT_THROW(CanonicalCode::from_hex("0g"), std::invalid_argument);
  EXPECT_THROW(CanonicalCode::from_hex("012"), std::invalid_argument);
}

TEST(CanonicalCode, AllRelabelingsOfEightVertexFamilySecondTree) {
  const auto t = test::family8_t2();
  const auto expected = canonical_code(t);
  std::vector<Vertex> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  int checked = 0;
  do {
    ASSERT_EQ(canonical_code(relabel(t, perm)), expected);
    ++checked;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(checked, 40320);
}

TEST(CanonicalCode, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 12; ++n) {
    FreeTreeEnumerator e(n);
    while (auto t = e.next()) {
      const auto code = canonical_code(*t);
      for (int r = 0; r < 100; ++r)
        ASSERT_EQ(canonical_code(relabel(*t, test::random_permutation(n, rng))), code);
    }
  }
}

TEST(CanonicalCode, EqualExactlyWhenIsomorphic) {
  // Random labeled trees compared pairwise against brute-force isomorphism.
  std::mt19937_64 rng(5);
  for (int n = 4; n <= 7; ++n) {
    std::vector<Graph> labeled;
    for (int trial = 0; trial < 40; ++trial) labeled.push_back(test::random_tree(n, rng));
    for (std::size_t i = 0; i < labeled.size(); ++i)
      for (std::size_t j = i + 1; j < labeled.size(); ++j)
        ASSERT_EQ(canonical_code(labeled[i]) == canonical_code(labeled[j]),
                  test::brute_force_isomorphic(labeled[i], labeled[j]));
  }
}

TEST(CanonicalCode, AsymmetricBicentralTree) {
  // Centres 1 and 2; the two halves have equal height but different shapes.
  auto t = test::graph1(7, {{1, 2}, {1, 3}, {3, 4}, {2, 5}, {5, 6}, {2, 7}});
  EXPECT_EQ(tree_centers(t), (std::vector<Vertex>{0, 1}));
  const auto code = canonical_code(t);
  std::mt19937_64 rng(17);
  for (int r = 0; r < 200; ++r)
    ASSERT_EQ(canonical_code(relabel(t, test::random_permutation(7, rng))), code);
}

TEST(CanonicalCode, ColouredCodesRespectColours) {
  auto p3 = test::path_graph(3);
  std::vector<int> a{1, 0, 0}, b{0, 0, 1}, c{0, 1, 0};
  EXPECT_EQ(canonical_code(p3, a), canonical_code(p3, b));
  EXPECT_NE(canonical_code(p3, a), canonical_code(p3, c));
  EXPECT_NE(canonical_code(p3, a), canonical_code(p3));

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 11;
    auto t = test::random_tree(n, rng);
    std::vector<int> colors(n);
    for (auto &col : colors) col = static_cast<int>(rng() % 2);
    auto perm = test::random_permutation(n, rng);
    std::vector<int> moved(n);
    for (int v = 0; v < n; ++v) moved[perm[v]] = colors[v];
    ASSERT_EQ(canonical_code(t, colors), canonical_code(relabel(t, perm), moved));
  }
}

TEST(FreeTrees, SmallOrders) {
  EXPECT_EQ(count_trees(1), 1u);
  EXPECT_EQ(count_trees(2), 1u);
  EXPECT_EQ(count_trees(3), 1u);
  EXPECT_THROW(FreeTreeEnumerator(0), std::invalid_argument);
}

TEST(FreeTrees, PathAndStarOnFourVertices) {
  FreeTreeEnumerator e(4);
  std::set<CanonicalCode> got;
  while (auto t = e.next()) got.insert(canonical_code(*t));
  std::set<CanonicalCode> expected{canonical_code(test::path_graph(4)), canonical_code(test::star_graph(3))};
  EXPECT_EQ(got, expected);
}

TEST(FreeTrees, MatchesPruferOracle) {
  // Class counts come from the oracle itself.
  std::map<int, std::size_t> counts;
  for (int n = 2; n <= 9; ++n) {
    auto oracle = prufer_oracle_trees(n);
    std::vector<Graph> enumerated;
    FreeTreeEnumerator e(n);
    while (auto t = e.next()) enumerated.push_back(*t);
    ASSERT_EQ(codes_of(enumerated), codes_of(oracle)) << "n=" << n;
    counts[n] = oracle.size();
  }
  EXPECT_EQ(counts[3], 1u);
  EXPECT_EQ(counts[4], 2u);
  EXPECT_EQ(counts[6], 6u);
  EXPECT_EQ(counts[8], 23u);
  EXPECT_EQ(counts[9], 47u);
}

TEST(FreeTrees, TreesDistinctAndDeterministic) {
  for (int n = 1; n <= 14; ++n) {
    FreeTreeEnumerator a(n), b(n);
    std::set<CanonicalCode> seen;
    while (auto t = a.next()) {
      auto u = b.next();
      ASSERT_TRUE(u.has_value());
      ASSERT_EQ(*t, *u);
      ASSERT_TRUE(is_tree(*t));
      ASSERT_TRUE(seen.insert(canonical_code(*t)).second) << "duplicate at n=" << n;
    }
    EXPECT_FALSE(b.next().has_value());
    EXPECT_FALSE(a.next().has_value());
  }
}

TEST(FreeTrees, RandomLabeledTreesLandOnEnumeratedCodes) {
  // Beyond the Prüfer range: no random labeled tree may be missing.
  std::mt19937_64 rng(13);
  for (int n = 10; n <= 14; ++n) {
    std::set<CanonicalCode> enumerated;
    FreeTreeEnumerator e(n);
    while (auto t = e.next()) enumerated.insert(canonical_code(*t));
    for (int trial = 0; trial < 2000; ++trial)
      ASSERT_TRUE(enumerated.contains(canonical_code(test::random_tree(n, rng))));
  }
}

TEST(Prufer, OracleRange) {
  EXPECT_THROW(prufer_oracle_trees(1), std::invalid_argument);
  EXPECT_THROW(prufer_oracle_trees(10), std::invalid_argument);
  EXPECT_EQ(prufer_oracle_trees(3).size(), 1u);
}

TEST(Prufer, DecodesToTrees) {
  EXPECT_EQ(tree_from_prufer(2, {}), Graph(2, {{0, 1}}));
  auto star = tree_from_prufer(5, {0, 0, 0});
  EXPECT_EQ(star.degree(0), 4);
  EXPECT_TRUE(is_tree(tree_from_prufer(6, {3, 1, 4, 1})));
}

} // namespace
} // namespace krev
