#pragma once

#include <map>
#include <span>
#include <string>
#include <variant>

#include "soncray/circuits.hpp"

namespace soncray {

enum class RaySign { minus, plus };

struct MonomialRay {
  LatticePoint point;  // even member of A

  friend bool operator==(const MonomialRay&, const MonomialRay&) = default;
};

struct CircuitRay {
  Circuit circuit;  // reduced, |S| >= 2
  RaySign sign;     // plus only for odd circuits

  friend bool operator==(const CircuitRay& a, const CircuitRay& b) {
    return a.circuit == b.circuit && a.sign == b.sign;
  }
};

// One of the extreme-ray families of the cone: a monomial square x^gamma or a
// circuit-polynomial family with a fixed inner sign.
struct ExtremeRay {
  std::variant<MonomialRay, CircuitRay> family;

  bool is_monomial() const { return std::holds_alternative<MonomialRay>(family); }
  const MonomialRay& monomial() const { return std::get<MonomialRay>(family); }
  const CircuitRay& circuit_ray() const { return std::get<CircuitRay>(family); }
  std::string str() const;

  friend bool operator==(const ExtremeRay& a, const ExtremeRay& b) {
    return a.family == b.family;
  }
};

struct Polynomial {
  std::map<LatticePoint, Rational> terms;  // no stored zeros

  void add_term(const LatticePoint& p, const Rational& c);
  double eval(std::span<const double> x) const;
  double abs_scale(std::span<const double> x) const;  // sum |c| x^alpha
};

// Monomial rays for every even point of A (ground-set order), then circuit
// rays per reduced circuit (lex order), minus before plus.
std::vector<ExtremeRay> catalog_extreme_rays(const GroundSet& A, Exec mode = Exec::parallel);
std::vector<ExtremeRay> catalog_extreme_rays(const GroundSet& A,
                                             const std::vector<Circuit>& circuits,
                                             Exec mode = Exec::parallel);

// x^gamma for monomial rays; sum lambda_alpha x^alpha -+ x^beta for circuit
// rays (canonical coefficients make the inner coefficient exactly -+1).
Polynomial canonical_generator(const ExtremeRay& r);

struct FamilyMember {
  CircuitRay ray;
  std::map<LatticePoint, Rational> outer_coeffs;  // keyed by S
  PowerProduct inner_magnitude;                   // Theta(coeffs), exact
  double inner_magnitude_approx = 0;
  int inner_sign = -1;  // -1 for minus, +1 for plus
};

FamilyMember sample_family_member(const CircuitRay& r,
                                  const std::map<LatticePoint, Rational>& coeffs);

}  // namespace soncray
