#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "soncray/lattice.hpp"
#include "soncray/parallel.hpp"
#include "soncray/rational.hpp"

namespace soncray {

// Barycentric coordinates of a point with respect to an affinely independent
// set, keyed in set order. All entries are strictly positive and sum to one.
struct BarycentricCoords {
  std::vector<std::pair<LatticePoint, Rational>> entries;

  const Rational& at(const LatticePoint& p) const;
  Rational min_coordinate() const;
};

// Exact rank test on the homogenized point matrix.
bool affinely_independent(std::span<const LatticePoint> points);

// Exact solve of the affine system; nullopt when the target is not in the
// relative interior of conv(simplex). Throws if the simplex is affinely
// dependent.
std::optional<BarycentricCoords> barycentric_coordinates(
    std::span<const LatticePoint> simplex, const LatticePoint& target);

// Exact feasibility via phase-1 simplex with Bland's rule.
bool in_convex_hull(std::span<const LatticePoint> hull_points, const LatticePoint& p);

// The points p with p not in conv(points \ {p}); one feasibility test per
// point, parallelizable.
std::vector<LatticePoint> vertices(std::span<const LatticePoint> points,
                                   Exec mode = Exec::parallel);

}  // namespace soncray
