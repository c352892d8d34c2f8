#pragma once

#include <cstddef>
#include <vector>

#include "soncray/rational.hpp"

namespace soncray {

enum class Relation { le, ge, eq };
enum class LpStatus { optimal, infeasible, unbounded };

struct LpConstraint {
  std::vector<Rational> coeffs;
  Relation rel;
  Rational rhs;
};

struct LpResult {
  LpStatus status;
  Rational objective;              // valid for LpStatus::optimal
  std::vector<Rational> solution;  // size num_vars, valid for LpStatus::optimal
};

// Dense two-phase simplex over exact rationals with Bland's anti-cycling
// rule. All variables are implicitly constrained to x >= 0.
LpResult solve_lp(std::size_t num_vars, const std::vector<Rational>& objective,
                  bool maximize, const std::vector<LpConstraint>& constraints);

// Phase-1 feasibility of { x >= 0 : constraints }.
bool lp_feasible(std::size_t num_vars, const std::vector<LpConstraint>& constraints);

}  // namespace soncray
