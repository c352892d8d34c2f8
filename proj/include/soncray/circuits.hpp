#pragma once

#include <map>
#include <string>
#include <vector>

#include "soncray/geometry.hpp"
#include "soncray/lattice.hpp"
#include "soncray/parallel.hpp"
#include "soncray/power_product.hpp"

namespace soncray {

enum class Parity { even, odd };

// Simplicial circuit (S, beta): S an affinely independent set of even points,
// beta a ground-set point in the relative interior of conv(S).
struct Circuit {
  std::vector<LatticePoint> support;  // lex sorted, |support| >= 2
  LatticePoint beta;
  BarycentricCoords lambda;
  Parity parity = Parity::even;

  bool contains_in_support(const LatticePoint& p) const;
  std::string str() const;

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.support == b.support && a.beta == b.beta;
  }
  friend bool operator<(const Circuit& a, const Circuit& b) {
    return a.support != b.support ? a.support < b.support : a.beta < b.beta;
  }
};

// All circuits on A, ordered lexicographically by (S, beta).
std::vector<Circuit> enumerate_circuits(const GroundSet& A, Exec mode = Exec::parallel);

// True iff conv(S) contains no even ground-set points besides S and beta.
bool is_reduced(const Circuit& c, const GroundSet& A);

// Integer Lambda with Lambda * lambda_alpha > 1 for every barycentric
// coordinate of every circuit on A; 2 when A has no circuits.
Integer global_lambda(const GroundSet& A);
Integer global_lambda(const std::vector<Circuit>& circuits);

// Theta = prod (c_alpha / lambda_alpha) ^ lambda_alpha, kept exact.
PowerProduct circuit_number(const Circuit& c, const std::map<LatticePoint, Rational>& coeffs);

// Nonnegativity of sum c_alpha x^alpha + d x^beta, i.e. |d| <= Theta.
bool circuit_nonneg(const Circuit& c, const std::map<LatticePoint, Rational>& coeffs,
                    const Rational& d);

// c_alpha = lambda_alpha, the choice that pins Theta to exactly 1.
std::map<LatticePoint, Rational> canonical_coefficients(const Circuit& c);

}  // namespace soncray
