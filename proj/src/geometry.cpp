#include "soncray/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "soncray/simplex.hpp"

namespace soncray {

namespace {

void require_common_dimension(std::span<const LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("empty point list");
  const int n = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != n) throw std::invalid_argument("dimension mismatch");
}

std::size_t matrix_rank(std::vector<std::vector<Rational>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c)
        if (m[rank][c] != 0) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

const Rational& BarycentricCoords::at(const LatticePoint& p) const {
  for (const auto& [point, value] : entries)
    if (point == p) return value;
  throw std::invalid_argument("point " + p.str() + " is not in the simplex");
}

Rational BarycentricCoords::min_coordinate() const {
  if (entries.empty()) throw std::logic_error("empty barycentric coordinates");
  Rational best = entries.front().second;
  for (const auto& [point, value] : entries)
    if (value < best) best = value;
  return best;
}

bool affinely_independent(std::span<const LatticePoint> points) {
  require_common_dimension(points);
  const int n = points.front().dim();
  std::vector<std::vector<Rational>> m;
  m.reserve(points.size());
  for (const auto& p : points) {
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j) + 1] = p[static_cast<std::size_t>(j)];
    m.push_back(std::move(row));
  }
  return matrix_rank(std::move(m)) == points.size();
}

std::optional<BarycentricCoords> barycentric_coordinates(
    std::span<const LatticePoint> simplex, const LatticePoint& target) {
  require_common_dimension(simplex);
  const int n = simplex.front().dim();
  if (target.dim() != n) throw std::invalid_argument("dimension mismatch");

  // Augmented system: rows are [1; alpha] per ambient row, columns the
  // simplex points, last column the homogenized target.
  const std::size_t rows = static_cast<std::size_t>(n) + 1;
  const std::size_t m = simplex.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(m + 1));
  for (std::size_t j = 0; j < m; ++j) {
    a[0][j] = 1;
    for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k) + 1][j] = simplex[j][static_cast<std::size_t>(k)];
  }
  a[0][m] = 1;
  for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k) + 1][m] = target[static_cast<std::size_t>(k)];

  // Gauss-Jordan over the simplex columns.
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(m);
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t p = row;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) throw std::invalid_argument("points are affinely dependent");
    std::swap(a[row], a[p]);
    const Rational inv = a[row][col];
    for (auto& v : a[row]) v /= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c <= m; ++c)
        if (a[row][c] != 0) a[r][c] -= f * a[row][c];
    }
    pivot_row[col] = row++;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (a[r][m] != 0) return std::nullopt;  // target outside the affine hull

  BarycentricCoords coords;
  coords.entries.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    Rational value = a[pivot_row[j]][m];
    if (value <= 0) return std::nullopt;  // boundary or outside
    coords.entries.emplace_back(simplex[j], std::move(value));
  }

  // The defining identities must hold exactly.
  Rational sum = 0;
  std::vector<Rational> combo(static_cast<std::size_t>(n), Rational(0));
  for (const auto& [point, value] : coords.entries) {
    sum += value;
    for (int k = 0; k < n; ++k) combo[static_cast<std::size_t>(k)] += value * point[static_cast<std::size_t>(k)];
  }
  if (sum != 1) throw std::logic_error("barycentric coordinates do not sum to one");
  for (int k = 0; k < n; ++k)
    if (combo[static_cast<std::size_t>(k)] != target[static_cast<std::size_t>(k)])
      throw std::logic_error("barycentric coordinates do not reproduce the target");
  return coords;
}

bool in_convex_hull(std::span<const LatticePoint> hull_points, const LatticePoint& p) {
  require_common_dimension(hull_points);
  const int n = hull_points.front().dim();
  if (p.dim() != n) throw std::invalid_argument("dimension mismatch");

  const std::size_t m = hull_points.size();
  std::vector<LpConstraint> constraints;
  constraints.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k < n; ++k) {
    LpConstraint c;
    c.coeffs.resize(m);
    for (std::size_t j = 0; j < m; ++j) c.coeffs[j] = hull_points[j][static_cast<std::size_t>(k)];
    c.rel = Relation::eq;
    c.rhs = p[static_cast<std::size_t>(k)];
    constraints.push_back(std::move(c));
  }
  LpConstraint affine;
  affine.coeffs.assign(m, Rational(1));
  affine.rel = Relation::eq;
  affine.rhs = 1;
  constraints.push_back(std::move(affine));
  return lp_feasible(m, constraints);
}

std::vector<LatticePoint> vertices(std::span<const LatticePoint> points, Exec mode) {
  require_common_dimension(points);
  if (points.size() == 1) return {points.front()};

  std::vector<char> is_vertex(points.size(), 0);
  parallel_for(mode, points.size(), [&](std::size_t i) {
    std::vector<LatticePoint> others;
    others.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    is_vertex[i] = in_convex_hull(others, points[i]) ? 0 : 1;
  });

  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (is_vertex[i]) out.push_back(points[i]);
  return out;
}

}  // namespace soncray
