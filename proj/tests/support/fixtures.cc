#include "support/fixtures.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <deque>
#include <limits>
#include <random>
#include <set>

#include "json.hpp"

namespace moto::testing {

std::string NodeName(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "n%04zu", i);
  return buf;
}

CollaborationGraph MakeGraph(std::size_t n,
                             const std::vector<WeightedEdge>& edges) {
  std::vector<NodeAttributes> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i].scholar_id = NodeName(i);
    nodes[i].paper_count = 1;
  }
  std::vector<EdgeSpec> specs;
  for (const WeightedEdge& e : edges) {
    specs.push_back({NodeName(e.a), NodeName(e.b), e.co_count, e.distance});
  }
  return CollaborationGraph::Create(std::move(nodes), std::move(specs));
}

CollaborationGraph Path(std::size_t n, double weight) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, weight});
  return MakeGraph(n, edges);
}

CollaborationGraph Clique(std::size_t n, double weight) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, weight});
  }
  return MakeGraph(n, edges);
}

CollaborationGraph Star(std::size_t leaves, double weight) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, i, weight});
  return MakeGraph(leaves + 1, edges);
}

CollaborationGraph RandomGraph(std::size_t n, double p, std::uint64_t seed,
                               double min_w, double max_w) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> weight(min_w, max_w);
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng) < p) edges.push_back({i, j, weight(rng)});
    }
  }
  return MakeGraph(n, edges);
}

PlantedRing MakePlantedRing(std::size_t cliques, std::size_t size,
                            double intra, double bridge, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> member(0, size - 1);
  std::vector<WeightedEdge> edges;
  PlantedRing ring;
  for (std::size_t c = 0; c < cliques; ++c) {
    std::vector<NodeId> team;
    for (std::size_t i = 0; i < size; ++i) {
      team.push_back(static_cast<NodeId>(c * size + i));
      for (std::size_t j = i + 1; j < size; ++j) {
        edges.push_back({c * size + i, c * size + j, intra, 3});
      }
    }
    ring.teams.push_back(std::move(team));
  }
  for (std::size_t c = 0; c < cliques; ++c) {
    const std::size_t next = (c + 1) % cliques;
    if (next == c || (cliques == 2 && c == 1)) continue;
    edges.push_back(
        {c * size + member(rng), next * size + member(rng), bridge, 1});
  }
  ring.graph = MakeGraph(cliques * size, edges);
  return ring;
}

CollaborationGraph TwoK4sWithPath(std::size_t path_nodes, double weight) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      edges.push_back({i, j, weight});
      edges.push_back({4 + i, 4 + j, weight});
    }
  }
  // Node 3 -> path 8.. -> node 4.
  std::size_t prev = 3;
  for (std::size_t k = 0; k < path_nodes; ++k) {
    edges.push_back({prev, 8 + k, weight});
    prev = 8 + k;
  }
  edges.push_back({prev, 4, weight});
  return MakeGraph(8 + path_nodes, edges);
}

PlantedCorpus MakePlantedCorpus(std::size_t cliques, std::size_t size,
                                std::size_t team_papers,
                                std::size_t noise_links, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> member(0, size - 1);
  std::uniform_int_distribution<std::size_t> other_team(1, cliques - 1);
  std::uniform_int_distribution<int> solo(0, 2);
  std::uniform_int_distribution<int> cites(0, 40);
  std::bernoulli_distribution second_inst(0.25);

  auto author = [](std::size_t c, std::size_t m) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "t%02zu_m%02zu", c, m);
    return std::string(buf);
  };
  auto inst = [](std::size_t c) { return "inst" + std::to_string(c); };

  PlantedCorpus corpus;
  std::vector<std::vector<std::vector<std::string>>> affiliation(cliques);
  for (std::size_t c = 0; c < cliques; ++c) {
    std::vector<std::string> team;
    for (std::size_t m = 0; m < size; ++m) {
      team.push_back(author(c, m));
      std::vector<std::string> a{inst(c)};
      if (second_inst(rng)) a.push_back(inst((c + 1) % cliques));
      affiliation[c].push_back(std::move(a));
    }
    corpus.teams.push_back(std::move(team));
  }

  std::size_t paper = 0;
  auto add = [&](std::vector<std::pair<std::size_t, std::size_t>> who,
                 int year) {
    PublicationRecord r;
    r.paper_id = "p" + std::to_string(paper++);
    r.year = year;
    r.citations = static_cast<std::uint64_t>(cites(rng));
    for (auto [c, m] : who) {
      r.authors.push_back(author(c, m));
      r.institutions.push_back(affiliation[c][m]);
    }
    corpus.records.push_back(std::move(r));
  };

  for (std::size_t c = 0; c < cliques; ++c) {
    for (std::size_t p = 0; p < team_papers; ++p) {
      std::vector<std::pair<std::size_t, std::size_t>> who;
      for (std::size_t m = 0; m < size; ++m) who.emplace_back(c, m);
      add(who, 2010 + static_cast<int>(p % 4));
    }
    for (std::size_t m = 0; m < size; ++m) {
      add({{c, m}}, 2006);
      for (int s = solo(rng); s > 0; --s) add({{c, m}}, 2011);
    }
  }
  // Every cross-team pair is used once, so bridges and noise links all carry
  // a co-count of 1.
  using Author = std::pair<std::size_t, std::size_t>;
  std::set<std::pair<Author, Author>> linked;
  auto link = [&](Author a, Author b, int year) {
    if (b < a) std::swap(a, b);
    if (!linked.insert({a, b}).second) return false;
    add({a, b}, year);
    return true;
  };
  for (std::size_t c = 0; c < (cliques == 2 ? 1 : cliques); ++c) {
    const std::size_t next = (c + 1) % cliques;
    while (!link({c, member(rng)}, {next, member(rng)}, 2012)) {
    }
  }
  for (std::size_t c = 0; c < cliques; ++c) {
    std::set<Author> outside;
    while (outside.size() < noise_links) {
      const Author x{(c + other_team(rng)) % cliques, member(rng)};
      if (outside.contains(x)) continue;
      if (link({c, member(rng)}, x, 2013)) outside.insert(x);
    }
  }
  return corpus;
}

void WriteCorpusJsonl(const std::vector<PublicationRecord>& records,
                      std::ostream& out) {
  for (const PublicationRecord& r : records) {
    nlohmann::ordered_json j{{"paper_id", r.paper_id},
                             {"year", r.year},
                             {"authors", r.authors},
                             {"institutions", r.institutions},
                             {"citations", r.citations},
                             {"fields", r.fields}};
    out << j.dump() << '\n';
  }
}

std::vector<std::vector<double>> FloydWarshall(const CollaborationGraph& graph) {
  const std::size_t n = graph.num_nodes();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const Edge& e : graph.edges()) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.distance);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.distance);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == inf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
    }
  }
  return d;
}

std::vector<std::array<NodeId, 3>> BruteForceTriangles(
    const CollaborationGraph& graph) {
  const std::size_t n = graph.num_nodes();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : graph.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  std::vector<std::array<NodeId, 3>> out;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      for (NodeId c = b + 1; c < n; ++c) {
        if (adj[a][c] && adj[b][c]) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::vector<std::size_t> FloodFill(const CollaborationGraph& graph) {
  const std::size_t n = graph.num_nodes();
  const std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(n, unset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != unset) continue;
    std::deque<std::size_t> queue{s};
    label[s] = next;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (const Edge& e : graph.edges()) {
        std::size_t other = e.u == v ? e.v : (e.v == v ? e.u : unset);
        if (other != unset && label[other] == unset) {
          label[other] = next;
          queue.push_back(other);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace moto::testing
