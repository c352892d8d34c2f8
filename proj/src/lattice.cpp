#include "soncray/lattice.hpp"

#include <algorithm>

namespace soncray {

std::string LatticePoint::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords[i]);
  }
  out += ')';
  return out;
}

bool is_even(const LatticePoint& p) {
  for (int c : p.coords)
    if (c % 2 != 0) return false;
  return true;
}

GroundSet GroundSet::from_points(int n, std::vector<LatticePoint> pts) {
  if (n < 1) throw std::invalid_argument("ground set dimension must be positive");
  if (pts.empty()) throw std::invalid_argument("empty point list");
  for (const auto& p : pts) {
    if (p.dim() != n) throw std::invalid_argument("dimension mismatch: point " + p.str());
    for (int c : p.coords)
      if (c < 0) throw std::invalid_argument("negative coordinate in point " + p.str());
  }
  std::sort(pts.begin(), pts.end());
  auto dup = std::adjacent_find(pts.begin(), pts.end());
  if (dup != pts.end()) throw std::invalid_argument("duplicate point " + dup->str());
  return GroundSet{n, std::move(pts)};
}

GroundSet GroundSet::from_coords(int n, const std::vector<std::vector<int>>& pts) {
  std::vector<LatticePoint> points;
  points.reserve(pts.size());
  for (const auto& c : pts) points.emplace_back(c);
  return from_points(n, std::move(points));
}

bool GroundSet::contains(const LatticePoint& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

std::size_t GroundSet::index_of(const LatticePoint& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || *it != p)
    throw std::invalid_argument("point " + p.str() + " not in ground set");
  return static_cast<std::size_t>(it - points.begin());
}

GroundSet parse_ground_set(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed ground-set document: ") + e.what());
  }
  return ground_set_from_json(doc);
}

GroundSet ground_set_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("malformed ground-set document: expected a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("malformed ground-set document: missing integer field \"n\"");
  int n = doc["n"].get<int>();
  if (n < 1) throw ParseError("ground set dimension must be positive");
  if (!doc.contains("points") || !doc["points"].is_array())
    throw ParseError("malformed ground-set document: missing array field \"points\"");
  const auto& arr = doc["points"];
  if (arr.empty()) throw ParseError("empty point list");

  std::vector<LatticePoint> pts;
  pts.reserve(arr.size());
  for (const auto& entry : arr) {
    std::vector<int> coords;
    if (entry.is_number_integer() && n == 1) {
      coords.push_back(entry.get<int>());
    } else if (entry.is_array()) {
      for (const auto& c : entry) {
        if (!c.is_number_integer()) throw ParseError("malformed point: coordinates must be integers");
        coords.push_back(c.get<int>());
      }
    } else {
      throw ParseError("malformed point: expected an array of integers");
    }
    LatticePoint p(std::move(coords));
    if (p.dim() != n) throw ParseError("dimension mismatch: point " + p.str() + " does not have length " + std::to_string(n));
    for (int c : p.coords)
      if (c < 0) throw ParseError("negative coordinate in point " + p.str());
    pts.push_back(std::move(p));
  }

  std::sort(pts.begin(), pts.end());
  auto dup = std::adjacent_find(pts.begin(), pts.end());
  if (dup != pts.end()) throw ParseError("duplicate point " + dup->str());
  return GroundSet{n, std::move(pts)};
}

nlohmann::ordered_json ground_set_to_json(const GroundSet& A) {
  nlohmann::ordered_json doc;
  doc["n"] = A.n;
  auto points = nlohmann::ordered_json::array();
  for (const auto& p : A.points) points.push_back(p.coords);
  doc["points"] = std::move(points);
  return doc;
}

std::vector<LatticePoint> even_subset(const GroundSet& A) {
  std::vector<LatticePoint> out;
  for (const auto& p : A.points)
    if (is_even(p)) out.push_back(p);
  return out;
}

}  // namespace soncray
