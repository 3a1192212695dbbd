#include <deque>
#include <random>

#include <gtest/gtest.h>

#include "cmpart/rouquier.hpp"

using namespace cmpart;

namespace {

MultiPartition mp(const char* s) { return MultiPartition::parse(s); }

// Pairwise relation on a KS(0,i,j) hyperplane, written out from the definition.
bool related(const MultiPartition& a, const MultiPartition& b, int i, int j) {
  for (int c = 0; c < a.m(); ++c)
    if (c != i && c != j && !(a[static_cast<std::size_t>(c)] == b[static_cast<std::size_t>(c)])) return false;
  return a[static_cast<std::size_t>(i)].residue() + a[static_cast<std::size_t>(j)].residue() ==
         b[static_cast<std::size_t>(i)].residue() + b[static_cast<std::size_t>(j)].residue();
}

// Components of the union of the relations for the given pairs, by BFS over all pairs.
std::vector<std::vector<std::size_t>> bfs_families(int m, int n, const std::vector<std::pair<int, int>>& pairs) {
  auto labels = enumerate_multipartitions(m, n);
  std::vector<int> comp(labels.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < labels.size(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = static_cast<int>(out.size());
    out.push_back({});
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      auto cur = queue.front();
      queue.pop_front();
      out.back().push_back(cur);
      for (std::size_t t = 0; t < labels.size(); ++t) {
        if (comp[t] >= 0) continue;
        for (auto [i, j] : pairs)
          if (related(labels[cur], labels[t], i, j)) {
            comp[t] = comp[s];
            queue.push_back(t);
            break;
          }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace

TEST(Essential, Examples) {
  EXPECT_TRUE(is_essential(Hyperplane::ks(0, 0, 1), 2));
  EXPECT_FALSE(is_essential(Hyperplane::ks(0, 0, 1), 6));
  EXPECT_TRUE(is_essential(Hyperplane::ks(0, 0, 2), 4));
  EXPECT_TRUE(is_essential(Hyperplane::nr0(), 6));
  EXPECT_THROW(Hyperplane::ks(0, 1, 1), Error);
}

TEST(Essential, NormMatchesPrimePower) {
  for (int m = 2; m <= 12; ++m)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        auto h = Hyperplane::ks(0, i, j);
        EXPECT_EQ(is_essential(h, m), is_essential_by_prime_power(h, m)) << m << ":" << i << "," << j;
      }
}

TEST(Hyperplanes, Containing) {
  EXPECT_TRUE(hyperplanes_containing(HeckeParams{1, 0, {0, 100, 250}}, 3).empty());
  auto hs = hyperplanes_containing(HeckeParams{1, 0, {0, 5, 0, 5}}, 4);
  bool found02 = false, found13 = false;
  for (const auto& h : hs) {
    EXPECT_TRUE(h.contains(HeckeParams{1, 0, {0, 5, 0, 5}}));
    EXPECT_NE(h.kind, Hyperplane::Kind::NR0);
    if (h == Hyperplane::ks(0, 0, 2)) found02 = true;
    if (h == Hyperplane::ks(0, 1, 3)) found13 = true;
  }
  EXPECT_TRUE(found02 && found13);
  EXPECT_EQ(hyperplanes_containing(HeckeParams{0, 0, {0, 1}}, 2).front(), Hyperplane::nr0());
  // k != 0: nS0 - nS1 = -1 lies on nR0 + nS0 - nS1 = 0
  auto kh2 = hyperplanes_containing(HeckeParams{1, 0, {0, 1}}, 2);
  ASSERT_EQ(kh2.size(), 1u);
  EXPECT_EQ(kh2[0], Hyperplane::ks(1, 0, 1));
  EXPECT_TRUE(hyperplanes_containing(HeckeParams{1, 0, {0, 1}}, 2, 1).empty());
}

TEST(Families, OnHyperplaneExamples) {
  auto f1 = families_on_hyperplane(Hyperplane::ks(0, 0, 1), 2, 1);
  EXPECT_EQ(f1.num_blocks(), 1u);
  auto f2 = families_on_hyperplane(Hyperplane::ks(0, 0, 1), 2, 2);
  auto idx = [&](const char* s) { return *f2.index_of(mp(s)); };
  EXPECT_TRUE(f2.same_block(idx("(2|)"), idx("(|2)")));
  EXPECT_FALSE(f2.same_block(idx("(2|)"), idx("(1,1|)")));
  auto f3 = families_on_hyperplane(Hyperplane::ks(0, 0, 1), 3, 1);
  EXPECT_EQ(f3.blocks()[f3.block_of(*f3.index_of(mp("(||1)")))].size(), 1u);
  EXPECT_THROW(families_on_hyperplane(Hyperplane::nr0(), 2, 1), Error);
}

TEST(Families, UnionFindMatchesBfs) {
  EXPECT_EQ(rouquier_families_w(HeckeParams{1, 0, {0, 0, 0, 0}}, 4, 3).blocks(), bfs_families(4, 3, {{0, 2}, {1, 3}, {0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  EXPECT_EQ(rouquier_families_w(HeckeParams{1, 0, {0, 4, 0, 4}}, 4, 3).blocks(), bfs_families(4, 3, {{0, 2}, {1, 3}}));
  EXPECT_EQ(rouquier_families_w(HeckeParams{1, 0, {0, 0}}, 2, 3).blocks(), bfs_families(2, 3, {{0, 1}}));
  EXPECT_EQ(rouquier_families_w(HeckeParams{1, 0, {0, 9, 9}}, 3, 3).blocks(), bfs_families(3, 3, {{1, 2}}));
}

TEST(Families, GenericAllSingletons) {
  auto f = rouquier_families_w(HeckeParams{1, 0, {0, 100, 250}}, 3, 3);
  EXPECT_EQ(f.num_blocks(), f.labels().size());
}

TEST(Chain, Examples) {
  EXPECT_TRUE(chain_equivalence(mp("(2|)"), mp("(2|)")));
  EXPECT_TRUE(chain_equivalence(mp("(2|)"), mp("(|2)")));
  EXPECT_FALSE(chain_equivalence(mp("(2|)"), mp("(1,1|)")));
  EXPECT_THROW(chain_equivalence(mp("(2|)"), mp("(2||)")), Error);
}

TEST(Chain, EquivalentToEqualResidue) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto labels = enumerate_multipartitions(m, n);
      std::vector<std::int64_t> zero(static_cast<std::size_t>(m), 0);
      for (const auto& a : labels)
        for (const auto& b : labels)
          EXPECT_EQ(chain_equivalence(a, b), shifted_residue(a, zero) == shifted_residue(b, zero)) << a.to_string() << " " << b.to_string();
      EXPECT_EQ(chain_components(m, n), cm_partition_w(m, n, ShiftData{1, zero}));
    }
}

TEST(Refinement, RefinesCmAndEqualsAtGapWitness) {
  for (auto g : {GroupParams{2, 2, 2}, GroupParams{2, 2, 3}, GroupParams{4, 2, 2}, GroupParams{3, 3, 2}, GroupParams{6, 2, 2}}) {
    for (std::int64_t step : {0, 1, 2, 5}) {
      ShiftData sd{1, {}};
      for (int j = 0; j < g.m; ++j) sd.s.push_back((j % g.p()) * step);
      auto r = rouquier_families_k(g, hecke_params(sd));
      auto c = cm_partition_k(g, sd);
      auto cmp = compare_partitions(r, c);
      EXPECT_TRUE(cmp.refines) << g.m << g.d << g.n << " step " << step;
    }
    auto w = gap_witness(g);
    auto cmp = compare_partitions(rouquier_families_k(g, hecke_params(w)), cm_partition_k(g, w));
    EXPECT_TRUE(cmp.equal);
    EXPECT_FALSE(cmp.counterexample.has_value());
  }
  EXPECT_THROW(rouquier_families_k(GroupParams{2, 2, 2}, HeckeParams{1, 0, {0, 1}}), Error);
}

TEST(Refinement, ComparisonReportsCounterexample) {
  auto labels = enumerate_multipartitions(2, 1);
  BlockPartition<MultiPartition> fine(labels, std::vector<std::size_t>{0, 1});
  BlockPartition<MultiPartition> coarse(labels, std::vector<std::size_t>{0, 0});
  auto a = compare_partitions(fine, coarse);
  EXPECT_TRUE(a.refines);
  EXPECT_FALSE(a.equal);
  ASSERT_TRUE(a.counterexample.has_value());
  auto b = compare_partitions(coarse, fine);
  EXPECT_FALSE(b.refines);
  EXPECT_EQ(*b.counterexample, (std::pair<std::size_t, std::size_t>{0, 0}));
}
