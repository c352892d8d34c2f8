#pragma once

#include <map>
#include <optional>
#include <variant>

#include "soncray/grading.hpp"
#include "soncray/rays.hpp"

namespace soncray {

// sign * base^exponent with base > 1 and exponent >= 0, kept unexpanded:
// layer exponents Lambda^i overflow any fixed-width integer quickly.
struct SignedPower {
  int sign = 1;
  Rational base;
  Integer exponent;

  friend bool operator==(const SignedPower&, const SignedPower&) = default;
};

using ExactScalar = std::variant<Rational, SignedPower>;

int scalar_sign(const ExactScalar& v);
// Expands to a rational when the power exponent is at most max_exponent.
std::optional<Rational> scalar_to_rational(const ExactScalar& v, unsigned max_exponent = 64);
double scalar_log2_abs(const ExactScalar& v);  // -inf for zero

// Values of the exposing linear map on the monomials of A; every point of A
// is keyed, zeros included.
struct ExposingFunctional {
  std::map<LatticePoint, ExactScalar> values;

  const ExactScalar& at(const LatticePoint& p) const;
};

struct ExposednessDecision {
  ExtremeRay ray;
  bool exposed = false;
  std::optional<Circuit> witness;  // present iff not exposed
};

// Circuit rays are always exposed; a monomial ray x^gamma is unexposed iff
// some circuit has gamma in its support and an even beta. The witness is the
// lexicographically first such circuit.
ExposednessDecision decide_exposed(const ExtremeRay& r, const GroundSet& A);
ExposednessDecision decide_exposed(const ExtremeRay& r, const GroundSet& A,
                                   const std::vector<Circuit>& circuits,
                                   const std::vector<ExtremeRay>& catalog);

ExposingFunctional expose_monomial(const LatticePoint& gamma, const GroundSet& A);

struct SigmaDelta {
  Rational sigma;  // in (0, 1)
  Rational delta;  // > 1
};

// Halving/doubling from 1 until the strict bounds against min/max
// lambda_alpha / c_alpha and Theta^-1 are certified exactly.
SigmaDelta choose_sigma_delta(const CircuitRay& r,
                              const std::map<LatticePoint, Rational>& coeffs);

// Canonical-coefficient construction (c = lambda, Theta = 1, sigma = 1/2,
// delta = 2): sigma^-1 on S, -+sigma^-1 on beta with sign opposite to the
// generator, (sigma^-1 delta)^(Lambda^i) on layer i, zero elsewhere.
ExposingFunctional expose_circuit_ray(const CircuitRay& r, const GroundSet& A);

// Pipeline variants reusing precomputed circuits and Lambda; they also hand
// back the graded partition underlying the functional.
struct FunctionalBundle {
  ExposingFunctional functional;
  GradedPartition partition;
};
FunctionalBundle expose_monomial_detail(const LatticePoint& gamma, const GroundSet& A,
                                        const std::vector<Circuit>& circuits,
                                        const Integer& lambda, Exec mode);
FunctionalBundle expose_circuit_ray_detail(const CircuitRay& r, const GroundSet& A,
                                           const std::vector<Circuit>& circuits,
                                           const Integer& lambda, Exec mode);

}  // namespace soncray
