#include "moto/density_peaks.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "moto/format.h"

namespace moto {

std::vector<std::uint32_t> LocalDensity(const DistanceIndex& distances,
                                        double d_c) {
  if (!(d_c > 0.0)) throw std::invalid_argument("d_c must be > 0");
  std::vector<std::uint32_t> rho(distances.num_nodes(), 0);
  for (NodeId v = 0; v < distances.num_nodes(); ++v) {
    std::uint32_t count = 0;
    for (const DistanceEntry& e : distances.row(v)) {
      if (e.target != v && e.distance < d_c) ++count;
    }
    rho[v] = count;
  }
  return rho;
}

std::vector<NodeId> TieBreakOrder(std::span<const std::uint32_t> rho) {
  std::vector<NodeId> order(rho.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return rho[a] > rho[b];
  });
  return order;
}

std::vector<double> DistinguishableDistance(const DistanceIndex& distances,
                                            std::span<const NodeId> order) {
  const std::size_t n = distances.num_nodes();
  if (order.size() != n) {
    throw std::invalid_argument("order does not cover the distance index");
  }
  std::vector<std::uint32_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = static_cast<std::uint32_t>(r);
  std::vector<double> delta(n, distances.cap());
  for (NodeId v = 0; v < n; ++v) {
    if (rank[v] == 0) {
      double best = -1.0;
      for (const DistanceEntry& e : distances.row(v)) {
        if (e.target != v) best = std::max(best, e.distance);
      }
      if (best >= 0.0) delta[v] = best;
      continue;
    }
    double best = kInfinity;
    for (const DistanceEntry& e : distances.row(v)) {
      if (rank[e.target] < rank[v]) best = std::min(best, e.distance);
    }
    if (best < kInfinity) delta[v] = best;
  }
  return delta;
}

namespace {

template <typename T>
std::vector<double> Normalize(std::span<const T> values) {
  std::vector<double> out(values.size(), 0.0);
  if (values.empty()) return out;
  auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = static_cast<double>(*lo_it);
  const double hi = static_cast<double>(*hi_it);
  if (hi > lo) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      out[i] = (static_cast<double>(values[i]) - lo) / (hi - lo);
    }
  } else if (hi > 0.0) {
    std::fill(out.begin(), out.end(), 1.0);
  }
  return out;
}

}  // namespace

DensityProfile GammaScores(std::span<const std::uint32_t> rho,
                           std::span<const double> delta) {
  if (rho.size() != delta.size()) {
    throw std::invalid_argument("rho and delta sizes differ");
  }
  DensityProfile p;
  p.rho.assign(rho.begin(), rho.end());
  p.delta.assign(delta.begin(), delta.end());
  p.rho_norm = Normalize(rho);
  p.delta_norm = Normalize(delta);
  p.gamma.resize(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    p.gamma[i] = p.rho_norm[i] * p.delta_norm[i];
  }
  p.order = TieBreakOrder(rho);
  p.rank.resize(rho.size());
  for (std::size_t r = 0; r < p.order.size(); ++r) {
    p.rank[p.order[r]] = static_cast<std::uint32_t>(r);
  }
  return p;
}

DensityProfile ComputeDensityProfile(const DistanceIndex& distances,
                                     double d_c) {
  std::vector<std::uint32_t> rho = LocalDensity(distances, d_c);
  std::vector<NodeId> order = TieBreakOrder(rho);
  std::vector<double> delta = DistinguishableDistance(distances, order);
  return GammaScores(rho, delta);
}

CenterPolicy ParseCenterPolicy(const std::string& text) {
  if (text == "auto") return AutoGap{};
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string kind = text.substr(0, colon);
    std::string value = text.substr(colon + 1);
    if (kind == "k") {
      long long k = ParseInt(value);
      if (k <= 0) throw std::invalid_argument("k must be positive");
      return TopK{static_cast<std::size_t>(k)};
    }
    if (kind == "threshold") return GammaThreshold{ParseDouble(value)};
  }
  throw std::invalid_argument("unknown center policy '" + text +
                              "' (expected k:N, threshold:G or auto)");
}

std::string ToString(const CenterPolicy& policy) {
  struct Visitor {
    std::string operator()(const TopK& p) const {
      return "k:" + std::to_string(p.k);
    }
    std::string operator()(const GammaThreshold& p) const {
      return "threshold:" + FormatRoundTrip(p.min_gamma);
    }
    std::string operator()(const AutoGap&) const { return "auto"; }
  };
  return std::visit(Visitor{}, policy);
}

std::vector<NodeId> GammaOrder(const DensityProfile& profile) {
  std::vector<NodeId> ids(profile.size());
  std::iota(ids.begin(), ids.end(), NodeId{0});
  std::stable_sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) {
    return profile.gamma[a] > profile.gamma[b];
  });
  return ids;
}

std::vector<NodeId> SelectCenters(const DensityProfile& profile,
                                  const CenterPolicy& policy) {
  const std::size_t n = profile.size();
  std::vector<NodeId> sorted = GammaOrder(profile);
  if (const auto* top = std::get_if<TopK>(&policy)) {
    if (top->k == 0 || top->k > n) {
      throw std::invalid_argument("k=" + std::to_string(top->k) +
                                  " outside [1, " + std::to_string(n) + "]");
    }
    sorted.resize(top->k);
    return sorted;
  }
  if (const auto* th = std::get_if<GammaThreshold>(&policy)) {
    std::vector<NodeId> out;
    for (NodeId v : sorted) {
      if (profile.gamma[v] >= th->min_gamma) out.push_back(v);
    }
    if (out.empty() && n > 0) {
      throw std::invalid_argument("gamma threshold selects no centers");
    }
    return out;
  }
  if (n == 0) return {};
  const std::size_t window = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(n))));
  const std::size_t last_cut = std::min(window, n - 1);
  std::size_t cut = 1;
  double best_gap = 0.0;
  for (std::size_t i = 0; i < last_cut; ++i) {
    const double hi = profile.gamma[sorted[i]];
    const double lo = profile.gamma[sorted[i + 1]];
    double gap = 1.0;
    if (lo > 0.0) {
      gap = hi / lo;
    } else if (hi > 0.0) {
      gap = kInfinity;
    }
    if (gap > best_gap) {
      best_gap = gap;
      cut = i + 1;
    }
  }
  sorted.resize(cut);
  return sorted;
}

std::vector<NodeId> Clustering::Members(std::size_t cluster) const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < assignment.size(); ++v) {
    if (assignment[v] == static_cast<std::int32_t>(cluster)) out.push_back(v);
  }
  return out;
}

std::vector<NodeId> Clustering::Unassigned() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < assignment.size(); ++v) {
    if (assignment[v] == kUnassigned) out.push_back(v);
  }
  return out;
}

Clustering AssignClusters(std::span<const NodeId> centers,
                          const DistanceIndex& distances) {
  if (centers.empty()) throw std::invalid_argument("no cluster centers");
  const std::size_t n = distances.num_nodes();
  Clustering c;
  c.centers.assign(centers.begin(), centers.end());
  c.assignment.assign(n, kUnassigned);
  std::vector<std::int32_t> center_slot(n, kUnassigned);
  for (std::size_t k = 0; k < centers.size(); ++k) {
    if (centers[k] >= n) throw std::invalid_argument("center out of range");
    if (center_slot[centers[k]] != kUnassigned) {
      throw std::invalid_argument("duplicate center");
    }
    center_slot[centers[k]] = static_cast<std::int32_t>(k);
  }
  for (NodeId v = 0; v < n; ++v) {
    if (center_slot[v] != kUnassigned) {
      c.assignment[v] = center_slot[v];
      continue;
    }
    // Scan the sparse row once; ties resolve to the lower center slot.
    double best = kInfinity;
    std::int32_t best_slot = kUnassigned;
    for (const DistanceEntry& e : distances.row(v)) {
      const std::int32_t slot = center_slot[e.target];
      if (slot == kUnassigned) continue;
      if (e.distance < best || (e.distance == best && slot < best_slot)) {
        best = e.distance;
        best_slot = slot;
      }
    }
    c.assignment[v] = best_slot;
  }
  return c;
}

std::vector<DecisionRegion> ClassifyRegions(const DensityProfile& profile,
                                            std::span<const NodeId> centers) {
  double rho_cut = kInfinity;
  double delta_cut = kInfinity;
  for (NodeId c : centers) {
    rho_cut = std::min(rho_cut, profile.rho_norm[c]);
    delta_cut = std::min(delta_cut, profile.delta_norm[c]);
  }
  std::vector<DecisionRegion> out(profile.size());
  for (std::size_t v = 0; v < profile.size(); ++v) {
    const bool high_rho = profile.rho_norm[v] >= rho_cut;
    const bool high_delta = profile.delta_norm[v] >= delta_cut;
    if (high_rho && high_delta) {
      out[v] = DecisionRegion::kCenter;
    } else if (high_rho) {
      out[v] = DecisionRegion::kCore;
    } else if (high_delta) {
      out[v] = DecisionRegion::kIsolated;
    } else {
      out[v] = DecisionRegion::kPeriphery;
    }
  }
  return out;
}

void WriteDecisionGraph(const CollaborationGraph& graph,
                        const DensityProfile& profile,
                        std::span<const NodeId> centers, std::ostream& out) {
  std::vector<bool> is_center(profile.size(), false);
  for (NodeId c : centers) is_center[c] = true;
  std::vector<DecisionRegion> regions = ClassifyRegions(profile, centers);
  out << "node_id,rho,delta,rho_norm,delta_norm,gamma,is_center,region\n";
  for (NodeId v : GammaOrder(profile)) {
    out << graph.scholar_id(v) << ',' << profile.rho[v] << ','
        << FormatFixed(profile.delta[v], 9) << ','
        << FormatFixed(profile.rho_norm[v], 9) << ','
        << FormatFixed(profile.delta_norm[v], 9) << ','
        << FormatFixed(profile.gamma[v], 9) << ','
        << (is_center[v] ? 1 : 0) << ',' << static_cast<int>(regions[v])
        << '\n';
  }
}

std::vector<OccupancyPoint> ScanOccupancy(const DistanceIndex& distances,
                                          std::span<const double> candidates) {
  const std::size_t n = distances.num_nodes();
  std::vector<OccupancyPoint> out;
  for (double d_c : candidates) {
    std::vector<std::uint32_t> rho = LocalDensity(distances, d_c);
    double sum = std::accumulate(rho.begin(), rho.end(), 0.0);
    OccupancyPoint p{d_c, 0.0, 0.0, false};
    if (n > 0) {
      p.mean_rho = sum / n;
      p.occupancy = p.mean_rho / n;
    }
    p.in_band = p.occupancy >= kOccupancyLow && p.occupancy <= kOccupancyHigh;
    out.push_back(p);
  }
  return out;
}

double SuggestCutoff(std::span<const OccupancyPoint> scan) {
  if (scan.empty()) throw std::invalid_argument("empty d_c scan");
  const double target = (kOccupancyLow + kOccupancyHigh) / 2.0;
  const OccupancyPoint* best = nullptr;
  auto better = [&](const OccupancyPoint& p) {
    if (best == nullptr) return true;
    if (p.in_band != best->in_band) return p.in_band;
    const double dp = std::abs(p.occupancy - target);
    const double db = std::abs(best->occupancy - target);
    if (dp != db) return dp < db;
    return p.d_c < best->d_c;
  };
  for (const OccupancyPoint& p : scan) {
    if (better(p)) best = &p;
  }
  return best->d_c;
}

std::vector<double> CutoffGrid(double step, double cap) {
  if (!(step > 0.0) || !(cap > 0.0)) {
    throw std::invalid_argument("grid step and cap must be > 0");
  }
  std::vector<double> out;
  for (int k = 1;; ++k) {
    const double v = std::round(k * step * 1e9) / 1e9;
    if (v > cap + 1e-12) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace moto
