#include "moto/motif.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "support/fixtures.h"

namespace moto {
namespace {

constexpr double kTwoK4sMean = 0.95;
constexpr double kTwoK4sStd = 0.85293610546159893;

std::multiset<std::size_t> Degrees(const CollaborationGraph& g) {
  std::multiset<std::size_t> out;
  for (NodeId v = 0; v < g.num_nodes(); ++v) out.insert(g.degree(v));
  return out;
}

std::vector<NodeId> All(std::size_t n) {
  std::vector<NodeId> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<NodeId>(i);
  return out;
}

// Pairs sharing a triangle, from the brute-force census.
std::set<std::pair<NodeId, NodeId>> OraclePairs(const CollaborationGraph& g) {
  std::set<std::pair<NodeId, NodeId>> out;
  for (const auto& t : testing::BruteForceTriangles(g)) {
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a != b) out.insert({t[a], t[b]});
      }
    }
  }
  return out;
}

TEST(TriangleIndexTest, SmallGraphs) {
  auto k3 = TriangleIndex::Build(testing::Clique(3, 0.5));
  EXPECT_EQ(k3.size(), 1u);
  EXPECT_TRUE(k3.PairInTriangle(0, 1));
  EXPECT_TRUE(k3.PairInTriangle(1, 2));
  EXPECT_TRUE(k3.PairInTriangle(2, 0));

  auto g4 = testing::Clique(4, 0.5);
  auto k4 = TriangleIndex::Build(g4);
  EXPECT_EQ(k4.size(), testing::BruteForceTriangles(g4).size());
  EXPECT_EQ(k4.size(), 4u);
  for (NodeId v = 0; v < 4; ++v) EXPECT_EQ(k4.node_count(v), 3u);

  auto tree = TriangleIndex::Build(testing::Star(5, 0.5));
  EXPECT_EQ(tree.size(), 0u);
  EXPECT_FALSE(tree.PairInTriangle(0, 1));
}

TEST(TriangleIndexTest, MatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = testing::RandomGraph(30 + 5 * seed, 0.15, seed);
    auto idx = TriangleIndex::Build(g, 1 + seed % 4);
    auto oracle = testing::BruteForceTriangles(g);
    ASSERT_EQ(idx.triangles(), oracle);
    std::vector<std::uint64_t> per(g.num_nodes(), 0);
    for (const auto& t : oracle) {
      for (NodeId v : t) ++per[v];
    }
    auto pairs = OraclePairs(g);
    for (NodeId a = 0; a < g.num_nodes(); ++a) {
      ASSERT_EQ(idx.node_count(a), per[a]);
      for (const Triangle& t : idx.triangles_from(a)) ASSERT_EQ(t[0], a);
      for (NodeId b = 0; b < g.num_nodes(); ++b) {
        ASSERT_EQ(idx.PairInTriangle(a, b), pairs.count({a, b}) > 0);
      }
    }
  }
}

TEST(FamiliarityTest, PairwiseExamples) {
  auto star = testing::Star(4, 0.5);
  std::vector<NodeId> leaves{1, 2, 3, 4};
  EXPECT_EQ(PairwiseFamiliarity(0, leaves, star), 4u);
  std::vector<NodeId> others{1, 2};
  EXPECT_EQ(PairwiseFamiliarity(3, others, star), 0u);
  auto k4 = testing::Clique(4, 0.5);
  auto team = All(4);
  EXPECT_EQ(PairwiseFamiliarity(2, team, k4), 3u);
}

TEST(FamiliarityTest, HigherOrderExamples) {
  auto k3 = testing::Clique(3, 0.5);
  auto t3 = All(3);
  auto idx3 = TriangleIndex::Build(k3);
  for (NodeId i = 0; i < 3; ++i) {
    EXPECT_EQ(HigherOrderFamiliarity(i, t3, idx3), 2u);
    EXPECT_EQ(HigherOrderFamiliarityWithin(i, t3, k3), 2u);
  }

  // Path 0-1-2: only bridges, no triangles.
  auto path = testing::Path(3, 0.5);
  auto tp = All(3);
  EXPECT_EQ(HigherOrderFamiliarity(1, tp, TriangleIndex::Build(path)), 0u);

  // K4 minus edge 0-3.
  auto g = testing::MakeGraph(
      4, {{0, 1, 0.5}, {0, 2, 0.5}, {1, 2, 0.5}, {1, 3, 0.5}, {2, 3, 0.5}});
  auto idx = TriangleIndex::Build(g);
  auto pairs = OraclePairs(g);
  std::uint32_t oracle = 0;
  for (NodeId j = 1; j < 4; ++j) oracle += pairs.count({0, j});
  auto t4 = All(4);
  EXPECT_EQ(HigherOrderFamiliarity(0, t4, idx), oracle);
  EXPECT_EQ(HigherOrderFamiliarity(0, t4, idx), 2u);
}

TEST(FamiliarityTest, WholeGraphVersusWithinTeam) {
  // Triangle 0-1-2; the team {0,1} only sees the triangle through node 2.
  auto g = testing::Clique(3, 0.5);
  auto idx = TriangleIndex::Build(g);
  std::vector<NodeId> team{0, 1};
  EXPECT_EQ(HigherOrderFamiliarity(0, team, idx), 1u);
  EXPECT_EQ(HigherOrderFamiliarityWithin(0, team, g), 0u);
}

TEST(FamiliarityTest, DominanceProperty) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = testing::RandomGraph(40, 0.12, 400 + seed);
    auto idx = TriangleIndex::Build(g);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<NodeId> team;
      std::bernoulli_distribution keep(0.3);
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (keep(rng)) team.push_back(v);
      }
      if (team.empty()) continue;
      for (NodeId i = 0; i < g.num_nodes(); ++i) {
        const bool in = std::binary_search(team.begin(), team.end(), i);
        const std::uint32_t limit = team.size() - (in ? 1 : 0);
        const auto f1 = PairwiseFamiliarity(i, team, g);
        const auto fn = HigherOrderFamiliarity(i, team, idx);
        const auto fw = HigherOrderFamiliarityWithin(i, team, g);
        ASSERT_LE(fn, f1);
        ASSERT_LE(fw, fn);
        ASSERT_LE(f1, limit);
      }
    }
  }
}

TEST(RewireTest, PreservesDegreesAndSimplicity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = testing::RandomGraph(60, 0.08, 500 + seed);
    auto r = RewirePreservingDegrees(g, seed);
    EXPECT_EQ(Degrees(r), Degrees(g));
    EXPECT_EQ(r.num_edges(), g.num_edges());
    for (NodeId v = 0; v < r.num_nodes(); ++v) {
      EXPECT_EQ(Degrees(r).size(), g.num_nodes());
      EXPECT_EQ(r.degree(v), g.degree(v));
    }
  }
}

TEST(RewireTest, DeterministicForSeed) {
  auto g = testing::RandomGraph(50, 0.1, 9);
  EXPECT_EQ(RewirePreservingDegrees(g, 42), RewirePreservingDegrees(g, 42));
  EXPECT_FALSE(RewirePreservingDegrees(g, 42) == RewirePreservingDegrees(g, 43));
}

TEST(RewireTest, ChangesTriangleCount) {
  auto g = testing::RandomGraph(100, 0.1, 77);
  auto before = testing::BruteForceTriangles(g).size();
  auto after = testing::BruteForceTriangles(RewirePreservingDegrees(g, 1)).size();
  EXPECT_NE(before, after);
}

TEST(RewireTest, DegenerateInputs) {
  auto single = testing::Path(2, 0.5);
  EXPECT_EQ(RewirePreservingDegrees(single, 3), single);
  auto k6 = testing::Clique(6, 0.5);
  EXPECT_EQ(RewirePreservingDegrees(k6, 3), k6);
  EXPECT_THROW(RewirePreservingDegrees(k6, 3, 0), std::invalid_argument);
}

TEST(MotifSignificanceTest, TriangleFreeFailsFrequency) {
  MotifParams params;
  params.seed = 1;
  auto v = MotifSignificance(testing::Path(12, 0.5), params);
  EXPECT_EQ(v.f_real, 0u);
  EXPECT_FALSE(v.frequent);
  EXPECT_FALSE(v.is_motif);
}

TEST(MotifSignificanceTest, CliqueFailsEffectSize) {
  MotifParams params;
  params.seed = 1;
  auto v = MotifSignificance(testing::Clique(6, 0.5), params);
  EXPECT_EQ(v.f_real, 20u);
  EXPECT_EQ(v.f_rand_mean, 20.0);
  EXPECT_EQ(v.f_rand_std, 0.0);
  EXPECT_TRUE(v.significant);
  EXPECT_TRUE(v.frequent);
  EXPECT_FALSE(v.large_effect);
  EXPECT_FALSE(v.is_motif);
}

TEST(MotifSignificanceTest, TwoK4sWithPathIsMotif) {
  MotifParams params;
  params.seed = 2024;
  auto g = testing::TwoK4sWithPath(10);
  auto v = MotifSignificance(g, params);
  EXPECT_EQ(v.f_real, 8u);
  ASSERT_EQ(v.replicate_counts.size(), 100u);
  // Frozen ensemble summary for seed 2024 (libstdc++ distributions).
  EXPECT_NEAR(v.f_rand_mean, kTwoK4sMean, 1e-12);
  EXPECT_NEAR(v.f_rand_std, kTwoK4sStd, 1e-12);
  EXPECT_LT(v.f_rand_mean, 8.0 / 1.1);
  EXPECT_TRUE(v.significant);
  EXPECT_TRUE(v.frequent);
  EXPECT_TRUE(v.large_effect);
  EXPECT_TRUE(v.is_motif);
}

TEST(MotifSignificanceTest, FrequencyRuleDirection) {
  MotifParams params;
  params.replicates = 5;
  params.frequency_rule = FrequencyRule::kAtMost;
  auto v = MotifSignificance(testing::Path(6, 0.5), params);
  EXPECT_TRUE(v.frequent);
  params.frequency_rule = FrequencyRule::kAtLeast;
  EXPECT_FALSE(MotifSignificance(testing::Path(6, 0.5), params).frequent);
}

TEST(MotifSignificanceTest, PaperDefaults) {
  MotifParams params;
  EXPECT_EQ(params.p_threshold, 0.01);
  EXPECT_EQ(params.min_frequency, 4);
  EXPECT_EQ(params.effect_ratio, 0.1);
  EXPECT_EQ(kFullScaleReplicates, 1000u);
  params.replicates = 0;
  EXPECT_THROW(MotifSignificance(testing::Path(3, 0.5), params),
               std::invalid_argument);
}

TEST(MotifSignificanceTest, DeterministicAcrossWorkers) {
  MotifParams params;
  params.replicates = 24;
  params.seed = 8;
  auto g = testing::RandomGraph(40, 0.15, 8);
  auto one = MotifSignificance(g, params, 1);
  auto many = MotifSignificance(g, params, 8);
  EXPECT_EQ(one.replicate_counts, many.replicate_counts);
  std::ostringstream a, b;
  WriteVerdictJson(one, params, a);
  WriteVerdictJson(many, params, b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(MotifSignificanceTest, VerdictJsonShape) {
  MotifParams params;
  params.replicates = 3;
  auto v = MotifSignificance(testing::Clique(4, 0.5), params);
  std::ostringstream out;
  WriteVerdictJson(v, params, out);
  auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["f_real"], 4);
  EXPECT_EQ(j["is_motif"].get<bool>(),
            j["conditions"]["significance"].get<bool>() &&
                j["conditions"]["frequency"].get<bool>() &&
                j["conditions"]["effect_size"].get<bool>());
  EXPECT_EQ(j["params"]["N"], 3);
  std::ostringstream csv;
  WriteEnsembleCsv(v, csv);
  EXPECT_EQ(csv.str(), "replicate,triangles\n0,4\n1,4\n2,4\n");
}

}  // namespace
}  // namespace moto
