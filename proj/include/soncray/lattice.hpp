#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace soncray {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Exponent vector of a monomial x^alpha; all entries nonnegative.
struct LatticePoint {
  std::vector<int> coords;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<int> c) : coords(std::move(c)) {}
  LatticePoint(std::initializer_list<int> c) : coords(c) {}

  int dim() const { return static_cast<int>(coords.size()); }
  int operator[](std::size_t i) const { return coords[i]; }

  auto operator<=>(const LatticePoint&) const = default;

  std::string str() const;
};

// True iff every coordinate is divisible by 2.
bool is_even(const LatticePoint& p);

// Finite support set: ambient dimension plus lexicographically sorted
// distinct points.
struct GroundSet {
  int n = 0;
  std::vector<LatticePoint> points;

  static GroundSet from_points(int n, std::vector<LatticePoint> pts);
  static GroundSet from_coords(int n, const std::vector<std::vector<int>>& pts);

  bool contains(const LatticePoint& p) const;
  std::size_t index_of(const LatticePoint& p) const;  // throws if absent
};

// Reads the JSON document {"n": <int>, "points": [[int,...],...]}.
GroundSet parse_ground_set(const std::string& text);
GroundSet ground_set_from_json(const nlohmann::json& doc);
nlohmann::ordered_json ground_set_to_json(const GroundSet& A);

// The even points of A, in ground-set order.
std::vector<LatticePoint> even_subset(const GroundSet& A);

}  // namespace soncray
