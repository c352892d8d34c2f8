#include "soncray/simplex.hpp"

#include <limits>
#include <stdexcept>

namespace soncray {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Tableau {
  std::size_t cols = 0;                  // structural columns, rhs lives at index cols
  std::vector<std::vector<Rational>> t;  // rows x (cols + 1)
  std::vector<std::size_t> basis;        // basic column per row
};

void pivot(Tableau& tb, std::size_t row, std::size_t col) {
  auto& pr = tb.t[row];
  const Rational p = pr[col];
  for (auto& v : pr) v /= p;
  for (std::size_t r = 0; r < tb.t.size(); ++r) {
    if (r == row) continue;
    auto& tr = tb.t[r];
    if (tr[col] == 0) continue;
    const Rational f = tr[col];
    for (std::size_t c = 0; c <= tb.cols; ++c)
      if (pr[c] != 0) tr[c] -= f * pr[c];
  }
  tb.basis[row] = col;
}

// Minimizes costs . x over the current tableau; Bland's rule throughout.
// Returns false when unbounded.
bool run_simplex(Tableau& tb, const std::vector<Rational>& costs) {
  const std::size_t rows = tb.t.size();
  for (;;) {
    // entering column: lowest index with negative reduced cost
    std::size_t enter = kNone;
    for (std::size_t j = 0; j < tb.cols && enter == kNone; ++j) {
      Rational reduced = costs[j];
      for (std::size_t i = 0; i < rows; ++i) {
        const auto& cb = costs[tb.basis[i]];
        if (cb != 0 && tb.t[i][j] != 0) reduced -= cb * tb.t[i][j];
      }
      if (reduced < 0) enter = j;
    }
    if (enter == kNone) return true;  // optimal

    // leaving row: minimum ratio, ties by lowest basic column index
    std::size_t leave = kNone;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (tb.t[i][enter] <= 0) continue;
      Rational ratio = tb.t[i][tb.cols] / tb.t[i][enter];
      if (leave == kNone || ratio < best ||
          (ratio == best && tb.basis[i] < tb.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == kNone) return false;  // unbounded
    pivot(tb, leave, enter);
  }
}

Rational basic_objective(const Tableau& tb, const std::vector<Rational>& costs) {
  Rational obj = 0;
  for (std::size_t i = 0; i < tb.t.size(); ++i)
    if (costs[tb.basis[i]] != 0) obj += costs[tb.basis[i]] * tb.t[i][tb.cols];
  return obj;
}

// Builds the phase-1 tableau and drives artificials to zero. Returns false if
// the constraint system is infeasible.
bool phase_one(std::size_t num_vars, const std::vector<LpConstraint>& constraints, Tableau& tb) {
  const std::size_t m = constraints.size();
  std::size_t n_slack = 0, n_art = 0;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != num_vars)
      throw std::invalid_argument("constraint width does not match variable count");
    Relation rel = c.rel;
    bool flip = c.rhs < 0;
    if (flip) rel = rel == Relation::le ? Relation::ge : rel == Relation::ge ? Relation::le : Relation::eq;
    if (rel != Relation::eq) ++n_slack;
    if (rel != Relation::le) ++n_art;
  }

  tb.cols = num_vars + n_slack + n_art;
  tb.t.assign(m, std::vector<Rational>(tb.cols + 1, Rational(0)));
  tb.basis.assign(m, kNone);

  std::size_t slack_at = num_vars;
  std::size_t art_at = num_vars + n_slack;
  const std::size_t first_art = art_at;

  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    const bool flip = c.rhs < 0;
    Relation rel = c.rel;
    if (flip) rel = rel == Relation::le ? Relation::ge : rel == Relation::ge ? Relation::le : Relation::eq;
    auto& row = tb.t[i];
    for (std::size_t j = 0; j < num_vars; ++j) row[j] = flip ? -c.coeffs[j] : c.coeffs[j];
    row[tb.cols] = flip ? -c.rhs : c.rhs;
    if (rel == Relation::le) {
      row[slack_at] = 1;
      tb.basis[i] = slack_at++;
    } else if (rel == Relation::ge) {
      row[slack_at++] = -1;
      row[art_at] = 1;
      tb.basis[i] = art_at++;
    } else {
      row[art_at] = 1;
      tb.basis[i] = art_at++;
    }
  }

  std::vector<Rational> costs(tb.cols, Rational(0));
  for (std::size_t j = first_art; j < tb.cols; ++j) costs[j] = 1;
  if (!run_simplex(tb, costs))
    throw std::logic_error("phase-1 simplex cannot be unbounded");
  if (basic_objective(tb, costs) != 0) return false;

  // Drive residual artificial basics out, dropping redundant rows.
  for (std::size_t i = 0; i < tb.t.size();) {
    if (tb.basis[i] < first_art) {
      ++i;
      continue;
    }
    std::size_t col = kNone;
    for (std::size_t j = 0; j < first_art && col == kNone; ++j)
      if (tb.t[i][j] != 0) col = j;
    if (col == kNone) {
      tb.t.erase(tb.t.begin() + static_cast<std::ptrdiff_t>(i));
      tb.basis.erase(tb.basis.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      pivot(tb, i, col);
      ++i;
    }
  }

  // Discard artificial columns.
  for (auto& row : tb.t) {
    row.erase(row.begin() + static_cast<std::ptrdiff_t>(first_art),
              row.begin() + static_cast<std::ptrdiff_t>(tb.cols));
  }
  tb.cols = first_art;
  return true;
}

}  // namespace

LpResult solve_lp(std::size_t num_vars, const std::vector<Rational>& objective,
                  bool maximize, const std::vector<LpConstraint>& constraints) {
  if (objective.size() != num_vars)
    throw std::invalid_argument("objective width does not match variable count");

  Tableau tb;
  if (!phase_one(num_vars, constraints, tb))
    return {LpStatus::infeasible, Rational(0), {}};

  std::vector<Rational> costs(tb.cols, Rational(0));
  for (std::size_t j = 0; j < num_vars; ++j) costs[j] = maximize ? -objective[j] : objective[j];
  if (!run_simplex(tb, costs)) return {LpStatus::unbounded, Rational(0), {}};

  std::vector<Rational> x(num_vars, Rational(0));
  for (std::size_t i = 0; i < tb.t.size(); ++i)
    if (tb.basis[i] < num_vars) x[tb.basis[i]] = tb.t[i][tb.cols];
  Rational obj = 0;
  for (std::size_t j = 0; j < num_vars; ++j)
    if (objective[j] != 0) obj += objective[j] * x[j];
  return {LpStatus::optimal, std::move(obj), std::move(x)};
}

bool lp_feasible(std::size_t num_vars, const std::vector<LpConstraint>& constraints) {
  Tableau tb;
  return phase_one(num_vars, constraints, tb);
}

}  // namespace soncray
