#pragma once

#include <map>
#include <optional>
#include <vector>

#include "soncray/circuits.hpp"

namespace soncray {

// Layers produced by iterated vertex stripping: layers[0] is the protected
// set, points stripped earlier land in higher layers.
struct GradedPartition {
  std::vector<std::vector<LatticePoint>> layers;  // layers[0] == keep
  std::map<LatticePoint, int> layer_of;

  const std::vector<LatticePoint>& keep() const { return layers.front(); }
  int depth() const { return static_cast<int>(layers.size()) - 1; }  // K
};

// Strips vertices of conv(E_i) outside keep until only keep remains; throws
// "keep-set not reachable" when stripping stalls first.
GradedPartition graded_partition(std::vector<LatticePoint> initial,
                                 std::vector<LatticePoint> keep,
                                 Exec mode = Exec::parallel);

// For every circuit (S', gamma') other than `defining` whose gamma' lies in
// the partitioned set, some point of S' must sit in a strictly higher layer.
bool check_layer_property(const GradedPartition& p, const std::vector<Circuit>& circuits,
                          const std::optional<Circuit>& defining = std::nullopt);
bool check_layer_property(const GradedPartition& p, const GroundSet& A,
                          const std::optional<Circuit>& defining = std::nullopt);

}  // namespace soncray
