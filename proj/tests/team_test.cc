#include "moto/team.h"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "support/fixtures.h"

namespace moto {
namespace {

FamiliarityFn Table(std::vector<std::uint32_t> values) {
  return [values = std::move(values)](NodeId v) { return values[v]; };
}

bool IsSubset(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Cliques {0..3} and {4..7} joined by 3-4 with the given weight.
CollaborationGraph TwoCliques(double bridge) {
  std::vector<testing::WeightedEdge> edges;
  for (std::size_t base : {0u, 4u}) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        edges.push_back({base + i, base + j, 0.2});
      }
    }
  }
  edges.push_back({3, 4, bridge});
  return testing::MakeGraph(8, edges);
}

Clustering Halves() {
  Clustering c;
  c.centers = {0, 7};
  c.assignment = {0, 0, 0, 0, 1, 1, 1, 1};
  return c;
}

TEST(BorderRegionTest, Examples) {
  // Bridge 0.3 < d_c: its endpoints are the only border nodes.
  auto near = AllPairs(TwoCliques(0.3));
  EXPECT_EQ(BorderRegion(Halves(), 0, near, 0.4), std::vector<NodeId>{3});
  EXPECT_EQ(BorderRegion(Halves(), 1, near, 0.4), std::vector<NodeId>{4});

  // d_c below every inter-team distance.
  EXPECT_TRUE(BorderRegion(Halves(), 0, near, 0.25).empty());
  EXPECT_TRUE(BorderRegion(Halves(), 1, near, 0.25).empty());

  // Bridge exactly at d_c is excluded.
  EXPECT_TRUE(BorderRegion(Halves(), 0, near, 0.3).empty());

  // Isolated clique cluster.
  auto k4 = AllPairs(testing::Clique(4, 0.2));
  Clustering one{{0}, {0, 0, 0, 0}};
  EXPECT_TRUE(BorderRegion(one, 0, k4, 3.0).empty());
}

TEST(BorderRegionTest, PairScanOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = testing::RandomGraph(50, 0.06, 600 + seed);
    auto fw = testing::FloydWarshall(g);
    auto idx = AllPairs(g, 3.5);
    auto p = ComputeDensityProfile(idx, 0.6);
    auto centers = SelectCenters(p, TopK{4});
    auto c = AssignClusters(centers, idx);
    for (std::size_t k = 0; k < centers.size(); ++k) {
      std::vector<NodeId> expect;
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (c.assignment[v] != static_cast<std::int32_t>(k)) continue;
        for (NodeId u = 0; u < g.num_nodes(); ++u) {
          if (c.assignment[u] != c.assignment[v] && fw[v][u] < 0.6) {
            expect.push_back(v);
            break;
          }
        }
      }
      ASSERT_EQ(BorderRegion(c, k, idx, 0.6), expect);
    }
  }
}

TEST(ThresholdsTest, Examples) {
  std::vector<std::uint32_t> rho{5, 1, 3, 9};
  auto fam = Table({4, 0, 2, 7});
  EXPECT_EQ(ComputeThresholds({}, rho, fam).rho, 0.0);
  EXPECT_EQ(ComputeThresholds({}, rho, fam).familiarity, 0.0);
  std::vector<NodeId> border{1, 2};
  auto t = ComputeThresholds(border, rho, fam);
  EXPECT_EQ(t.rho, 3.0);
  EXPECT_EQ(t.familiarity, 2.0);

  // Border = whole team: only the joint maximiser survives.
  std::vector<NodeId> team{0, 1, 2, 3};
  auto all = ComputeThresholds(team, rho, fam);
  EXPECT_EQ(FilterTeam(team, all, rho, fam), std::vector<NodeId>{3});
}

TEST(FilterTeamTest, Examples) {
  std::vector<std::uint32_t> rho{5, 1, 3};
  auto fam = Table({1, 2, 0});
  std::vector<NodeId> team{0, 1, 2};
  EXPECT_EQ(FilterTeam(team, {0, 0}, rho, fam), team);
  EXPECT_TRUE(FilterTeam(team, {10, 10}, rho, fam).empty());
  EXPECT_EQ(FilterTeam(team, {1, 1}, rho, fam), (std::vector<NodeId>{0, 1}));
}

TEST(FilterTeamTest, PendantOnK4IsExcludedInHigherOrderMode) {
  // K4 {0..3} plus pendant 4 attached to 3.
  auto g = testing::MakeGraph(5, {{0, 1, 0.2}, {0, 2, 0.2}, {0, 3, 0.2},
                                  {1, 2, 0.2}, {1, 3, 0.2}, {2, 3, 0.2},
                                  {3, 4, 0.2}});
  auto tri = TriangleIndex::Build(g);
  std::vector<NodeId> team{0, 1, 2, 3, 4};
  FamiliarityFn fam = [&](NodeId v) {
    return HigherOrderFamiliarity(v, team, tri);
  };
  EXPECT_EQ(fam(4), 0u);
  std::vector<std::uint32_t> rho(5, 1);
  EXPECT_EQ(FilterTeam(team, {0, 1}, rho, fam),
            (std::vector<NodeId>{0, 1, 2, 3}));
}

TEST(FilterTeamTest, MonotoneInThresholds) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::uint32_t> val(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint32_t> rho(12), f(12);
    for (auto& x : rho) x = val(rng);
    for (auto& x : f) x = val(rng);
    auto fam = Table(f);
    std::vector<NodeId> team{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    TeamThresholds lo{double(val(rng)), double(val(rng))};
    TeamThresholds hi{lo.rho + val(rng) % 3, lo.familiarity + val(rng) % 3};
    auto a = FilterTeam(team, lo, rho, fam);
    auto b = FilterTeam(team, hi, rho, fam);
    ASSERT_TRUE(IsSubset(b, a));
    ASSERT_TRUE(IsSubset(a, team));
    for (NodeId v : b) {
      ASSERT_GE(rho[v], hi.rho);
      ASSERT_GE(f[v], hi.familiarity);
    }
  }
}

TEST(FilterTeamTest, HigherOrderSubsetOfPairwiseAtFixedThresholds) {
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = testing::RandomGraph(30, 0.2, 700 + seed);
    auto tri = TriangleIndex::Build(g);
    std::vector<NodeId> team;
    std::bernoulli_distribution keep(0.5);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (keep(rng)) team.push_back(v);
    }
    std::vector<std::uint32_t> rho(g.num_nodes(), 0);
    FamiliarityFn p = [&](NodeId v) { return PairwiseFamiliarity(v, team, g); };
    FamiliarityFn h = [&](NodeId v) {
      return HigherOrderFamiliarity(v, team, tri);
    };
    for (double f = 0; f <= 6; ++f) {
      ASSERT_TRUE(IsSubset(FilterTeam(team, {0, f}, rho, h),
                           FilterTeam(team, {0, f}, rho, p)));
    }
  }
}

TEST(SplitByInstitutionTest, Examples) {
  std::vector<NodeAttributes> nodes(4);
  for (int i = 0; i < 4; ++i) {
    nodes[i].scholar_id = testing::NodeName(i);
    nodes[i].paper_count = 1;
  }
  nodes[0].institutions = {"mit"};
  nodes[1].institutions = {"cmu", "mit"};
  nodes[2].institutions = {"cmu"};
  auto g = CollaborationGraph::Create(nodes, {});

  // Everyone in the team shares "mit".
  std::vector<NodeId> mit_only{0};
  auto single = SplitByInstitution(0, mit_only, g);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].members, mit_only);

  std::vector<NodeId> team{0, 1, 2};
  auto splits = SplitByInstitution(7, team, g);
  ASSERT_EQ(splits.size(), 2u);
  EXPECT_EQ(splits[0].institution, "cmu");
  EXPECT_EQ(splits[0].members, (std::vector<NodeId>{1, 2}));
  EXPECT_EQ(splits[1].institution, "mit");
  EXPECT_EQ(splits[1].members, (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(splits[0].team_id, 7u);
  std::set<NodeId> uni, inter;
  for (NodeId v : splits[0].members) uni.insert(v);
  for (NodeId v : splits[1].members) {
    if (!uni.insert(v).second) inter.insert(v);
  }
  EXPECT_EQ(uni, (std::set<NodeId>{0, 1, 2}));
  EXPECT_EQ(inter, std::set<NodeId>{1});

  EXPECT_TRUE(SplitByInstitution(0, {}, g).empty());

  std::vector<NodeId> with_unknown{2, 3};
  auto u = SplitByInstitution(0, with_unknown, g);
  ASSERT_EQ(u.size(), 2u);
  EXPECT_EQ(u[1].institution, kUnknownInstitution);
  EXPECT_EQ(u[1].members, std::vector<NodeId>{3});
}

TEST(FamiliarityModeTest, Parse) {
  EXPECT_EQ(ParseFamiliarityMode("pairwise"), FamiliarityMode::kPairwise);
  EXPECT_EQ(ParseFamiliarityMode("higher-order"),
            FamiliarityMode::kHigherOrder);
  EXPECT_EQ(ToString(FamiliarityMode::kHigherOrder), "higher-order");
  EXPECT_THROW(ParseFamiliarityMode("triangle"), std::invalid_argument);
}

TEST(RecognizeTest, PlantedRing) {
  for (auto mode : {FamiliarityMode::kHigherOrder, FamiliarityMode::kPairwise}) {
    auto ring = testing::MakePlantedRing(5, 8, 0.2, 0.9, 1);
    RecognitionConfig config;
    config.d_c = 0.5;
    config.center_policy = TopK{5};
    config.mode = mode;
    auto result = Recognize(ring.graph, config);
    ASSERT_EQ(result.teams.size(), 5u);
    std::set<std::vector<NodeId>> got, want(ring.teams.begin(), ring.teams.end());
    for (const auto& t : result.teams) {
      got.insert(t.members);
      EXPECT_TRUE(t.border.empty());
      EXPECT_TRUE(t.center_retained);
      EXPECT_EQ(t.mode, mode);
    }
    EXPECT_EQ(got, want);
  }
}

TEST(RecognizeTest, SingleClique) {
  RecognitionConfig config;
  config.center_policy = TopK{1};
  config.d_c = 0.5;
  auto result = Recognize(testing::Clique(6, 0.2), config);
  ASSERT_EQ(result.teams.size(), 1u);
  EXPECT_EQ(result.teams[0].members, (std::vector<NodeId>{0, 1, 2, 3, 4, 5}));
}

TEST(RecognizeTest, IsolatedEdges) {
  // Three disjoint edges; every pair is its own cluster with an empty border.
  auto g = testing::MakeGraph(6, {{0, 1, 0.3}, {2, 3, 0.3}, {4, 5, 0.3}});
  RecognitionConfig config;
  config.d_c = 0.5;
  config.center_policy = TopK{3};
  auto result = Recognize(g, config);
  ASSERT_EQ(result.teams.size(), 3u);
  for (const auto& t : result.teams) {
    EXPECT_EQ(t.members.size(), 2u);
    EXPECT_EQ(t.thresholds.rho, 0.0);
    EXPECT_EQ(t.thresholds.familiarity, 0.0);
  }

  // A positive familiarity threshold empties every higher-order team.
  auto idx = AllPairs(g);
  auto tri = TriangleIndex::Build(g);
  for (const auto& t : result.teams) {
    FamiliarityFn h = [&](NodeId v) {
      return HigherOrderFamiliarity(v, t.raw_members, tri);
    };
    EXPECT_TRUE(
        FilterTeam(t.raw_members, {0, 1}, result.profile.rho, h).empty());
  }
}

TEST(RecognizeTest, InvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto g = testing::RandomGraph(70, 0.05, 800 + seed);
    RecognitionConfig config;
    config.d_c = 0.6;
    config.center_policy = TopK{5};
    auto r = Recognize(g, config);
    std::set<NodeId> seen;
    for (const auto& t : r.teams) {
      EXPECT_TRUE(IsSubset(t.members, t.raw_members));
      EXPECT_TRUE(IsSubset(t.border, t.raw_members));
      EXPECT_GE(t.members.size(), config.min_team_size);
      for (NodeId v : t.members) {
        EXPECT_GE(r.profile.rho[v], t.thresholds.rho);
        EXPECT_TRUE(seen.insert(v).second);
      }
    }
    // Raw clusters partition the assigned nodes.
    std::size_t assigned = 0;
    for (std::size_t k = 0; k < r.clustering.centers.size(); ++k) {
      assigned += r.clustering.Members(k).size();
    }
    EXPECT_EQ(assigned + r.clustering.Unassigned().size(), g.num_nodes());
    EXPECT_EQ(r.teams.size() + r.dissolved.size() + r.undersized.size(),
              r.clustering.centers.size());
  }
}

TEST(RecognizeTest, PureFunctionOfInput) {
  auto g = testing::RandomGraph(90, 0.05, 31);
  RecognitionConfig config;
  config.d_c = 0.5;
  auto a = Recognize(g, config);
  config.workers = 8;
  auto b = Recognize(g, config);
  ASSERT_EQ(a.teams.size(), b.teams.size());
  for (std::size_t k = 0; k < a.teams.size(); ++k) {
    EXPECT_EQ(a.teams[k].members, b.teams[k].members);
    EXPECT_EQ(a.teams[k].border, b.teams[k].border);
  }
  EXPECT_EQ(a.profile.gamma, b.profile.gamma);
  EXPECT_EQ(a.clustering.assignment, b.clustering.assignment);
}

TEST(RecognizeTest, Errors) {
  RecognitionConfig config;
  config.d_c = 0.0;
  EXPECT_THROW(Recognize(testing::Clique(3, 0.2), config),
               std::invalid_argument);
  config.d_c = 0.5;
  EXPECT_TRUE(Recognize(CollaborationGraph{}, config).teams.empty());
}

}  // namespace
}  // namespace moto
