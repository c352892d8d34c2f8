#pragma once

// Independent test oracles. These deliberately avoid the library's linear
// algebra: determinants grow by Laplace expansion, barycentric coordinates by
// Cramer's rule, and the floating-point hull test is a separate Dantzig-rule
// simplex in doubles.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "soncray/lattice.hpp"
#include "soncray/rational.hpp"

namespace soncray::testing {

struct OracleCircuit {
  std::vector<LatticePoint> support;
  LatticePoint beta;
  std::vector<Rational> lambda;  // aligned with support
};

inline Rational det_laplace(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][j] * det_laplace(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

inline void index_combinations(std::size_t total, std::size_t k,
                               std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > total) return;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == total - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Homogenized column for a point: (1, p_1, ..., p_n).
inline std::vector<Rational> homog(const LatticePoint& p) {
  std::vector<Rational> col(static_cast<std::size_t>(p.dim()) + 1);
  col[0] = 1;
  for (int j = 0; j < p.dim(); ++j) col[static_cast<std::size_t>(j) + 1] = p[static_cast<std::size_t>(j)];
  return col;
}

inline bool oracle_affinely_independent(const std::vector<LatticePoint>& pts) {
  const std::size_t m = pts.size();
  const std::size_t rows = static_cast<std::size_t>(pts.front().dim()) + 1;
  if (m > rows) return false;
  std::vector<std::vector<std::size_t>> row_sets;
  index_combinations(rows, m, row_sets);
  for (const auto& rs : row_sets) {
    std::vector<std::vector<Rational>> square(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) square[i][j] = homog(pts[j])[rs[i]];
    if (det_laplace(square) != 0) return true;
  }
  return false;
}

// Cramer's rule on a nonsingular row subset, then consistency on all rows.
inline std::optional<std::vector<Rational>> oracle_barycentric(
    const std::vector<LatticePoint>& S, const LatticePoint& target) {
  const std::size_t m = S.size();
  const std::size_t rows = static_cast<std::size_t>(target.dim()) + 1;
  const auto b = homog(target);

  std::vector<std::vector<std::size_t>> row_sets;
  index_combinations(rows, m, row_sets);
  for (const auto& rs : row_sets) {
    std::vector<std::vector<Rational>> square(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) square[i][j] = homog(S[j])[rs[i]];
    const Rational d = det_laplace(square);
    if (d == 0) continue;

    std::vector<Rational> lambda(m);
    for (std::size_t j = 0; j < m; ++j) {
      auto replaced = square;
      for (std::size_t i = 0; i < m; ++i) replaced[i][j] = b[rs[i]];
      lambda[j] = det_laplace(replaced) / d;
    }
    // consistency on every homogenized row, then strict positivity
    for (std::size_t r = 0; r < rows; ++r) {
      Rational sum = 0;
      for (std::size_t j = 0; j < m; ++j) sum += lambda[j] * homog(S[j])[r];
      if (sum != b[r]) return std::nullopt;
    }
    for (const auto& l : lambda)
      if (l <= 0) return std::nullopt;
    return lambda;
  }
  return std::nullopt;  // singular in every row subset: affinely dependent
}

inline std::vector<OracleCircuit> oracle_circuits(const GroundSet& A) {
  std::vector<LatticePoint> evens;
  for (const auto& p : A.points)
    if (is_even(p)) evens.push_back(p);

  std::vector<OracleCircuit> found;
  const std::size_t kmax = std::min<std::size_t>(static_cast<std::size_t>(A.n) + 1, evens.size());
  for (std::size_t k = 2; k <= kmax; ++k) {
    std::vector<std::vector<std::size_t>> combos;
    index_combinations(evens.size(), k, combos);
    for (const auto& combo : combos) {
      std::vector<LatticePoint> support;
      for (std::size_t idx : combo) support.push_back(evens[idx]);
      if (!oracle_affinely_independent(support)) continue;
      for (const auto& beta : A.points) {
        if (std::find(support.begin(), support.end(), beta) != support.end()) continue;
        auto lambda = oracle_barycentric(support, beta);
        if (lambda) found.push_back({support, beta, std::move(*lambda)});
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const OracleCircuit& a, const OracleCircuit& b) {
    return a.support != b.support ? a.support < b.support : a.beta < b.beta;
  });
  return found;
}

// Phase-1 simplex in doubles with Dantzig's rule; returns feasibility of
// p in conv(E) together with the residual infeasibility as a margin.
inline std::pair<bool, double> float_in_hull(const std::vector<LatticePoint>& E,
                                             const LatticePoint& p) {
  const std::size_t m = E.size();
  const std::size_t rows = static_cast<std::size_t>(p.dim()) + 1;
  const std::size_t cols = m + rows;  // mu variables then artificials

  std::vector<std::vector<double>> t(rows, std::vector<double>(cols + 1, 0.0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    double rhs = r == 0 ? 1.0 : static_cast<double>(p[r - 1]);
    for (std::size_t j = 0; j < m; ++j)
      t[r][j] = r == 0 ? 1.0 : static_cast<double>(E[j][r - 1]);
    if (rhs < 0) {
      rhs = -rhs;
      for (std::size_t j = 0; j < m; ++j) t[r][j] = -t[r][j];
    }
    t[r][m + r] = 1.0;
    t[r][cols] = rhs;
    basis[r] = m + r;
  }

  for (int iter = 0; iter < 10000; ++iter) {
    // reduced costs for min sum(artificials)
    std::size_t enter = cols;
    double best_cost = -1e-9;
    for (std::size_t j = 0; j < m; ++j) {
      double reduced = 0;
      for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= m) reduced -= t[r][j];
      if (reduced < best_cost) {
        best_cost = reduced;
        enter = j;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    double best_ratio = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 1e-12) continue;
      const double ratio = t[r][cols] / t[r][enter];
      if (leave == rows || ratio < best_ratio) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) break;
    const double pv = t[leave][enter];
    for (auto& v : t[leave]) v /= pv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || std::fabs(t[r][enter]) < 1e-15) continue;
      const double f = t[r][enter];
      for (std::size_t c = 0; c <= cols; ++c) t[r][c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }

  double infeasibility = 0;
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] >= m) infeasibility += t[r][cols];
  return {infeasibility < 1e-9, std::fabs(infeasibility)};
}

}  // namespace soncray::testing
