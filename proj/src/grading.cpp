#include "soncray/grading.hpp"

#include <algorithm>
#include <stdexcept>

namespace soncray {

namespace {

std::vector<LatticePoint> sorted_unique(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<LatticePoint> set_difference(const std::vector<LatticePoint>& a,
                                         const std::vector<LatticePoint>& b) {
  std::vector<LatticePoint> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

GradedPartition graded_partition(std::vector<LatticePoint> initial,
                                 std::vector<LatticePoint> keep, Exec mode) {
  initial = sorted_unique(std::move(initial));
  keep = sorted_unique(std::move(keep));
  if (initial.empty()) throw std::invalid_argument("empty initial set");
  if (!std::includes(initial.begin(), initial.end(), keep.begin(), keep.end()))
    throw std::invalid_argument("keep-set is not contained in the initial set");

  std::vector<std::vector<LatticePoint>> stripped;  // round order
  std::vector<LatticePoint> current = initial;
  while (current != keep) {
    auto verts = sorted_unique(vertices(current, mode));
    auto strip = set_difference(verts, keep);
    if (strip.empty())
      throw std::runtime_error("keep-set not reachable: vertex stripping stalled");
    current = set_difference(current, strip);
    stripped.push_back(std::move(strip));
  }

  GradedPartition p;
  p.layers.push_back(keep);
  for (auto it = stripped.rbegin(); it != stripped.rend(); ++it)
    p.layers.push_back(std::move(*it));
  for (std::size_t i = 0; i < p.layers.size(); ++i)
    for (const auto& point : p.layers[i]) p.layer_of.emplace(point, static_cast<int>(i));
  return p;
}

bool check_layer_property(const GradedPartition& p, const std::vector<Circuit>& circuits,
                          const std::optional<Circuit>& defining) {
  for (const auto& c : circuits) {
    if (defining && *defining == c) continue;
    auto it = p.layer_of.find(c.beta);
    if (it == p.layer_of.end()) continue;  // beta outside the partitioned set
    const int beta_layer = it->second;
    bool has_higher = false;
    for (const auto& alpha : c.support) {
      auto at = p.layer_of.find(alpha);
      if (at != p.layer_of.end() && at->second > beta_layer) {
        has_higher = true;
        break;
      }
    }
    if (!has_higher) return false;
  }
  return true;
}

bool check_layer_property(const GradedPartition& p, const GroundSet& A,
                          const std::optional<Circuit>& defining) {
  return check_layer_property(p, enumerate_circuits(A), defining);
}

}  // namespace soncray
