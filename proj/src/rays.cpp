#include "soncray/rays.hpp"

#include <cmath>
#include <stdexcept>

namespace soncray {

std::string ExtremeRay::str() const {
  if (is_monomial()) return "monomial " + monomial().point.str();
  const auto& cr = circuit_ray();
  return std::string("circuit ") + cr.circuit.str() +
         (cr.sign == RaySign::minus ? " [-]" : " [+]");
}

void Polynomial::add_term(const LatticePoint& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

double Polynomial::eval(std::span<const double> x) const {
  double value = 0;
  for (const auto& [point, coeff] : terms) {
    double mono = 1;
    for (int j = 0; j < point.dim(); ++j)
      mono *= std::pow(x[static_cast<std::size_t>(j)], point[static_cast<std::size_t>(j)]);
    value += to_double(coeff) * mono;
  }
  return value;
}

double Polynomial::abs_scale(std::span<const double> x) const {
  double value = 0;
  for (const auto& [point, coeff] : terms) {
    double mono = 1;
    for (int j = 0; j < point.dim(); ++j)
      mono *= std::pow(x[static_cast<std::size_t>(j)], point[static_cast<std::size_t>(j)]);
    value += std::fabs(to_double(coeff)) * mono;
  }
  return value;
}

std::vector<ExtremeRay> catalog_extreme_rays(const GroundSet& A,
                                             const std::vector<Circuit>& circuits, Exec mode) {
  std::vector<ExtremeRay> rays;
  for (const auto& p : A.points)
    if (is_even(p)) rays.push_back(ExtremeRay{MonomialRay{p}});

  std::vector<char> reduced(circuits.size(), 0);
  parallel_for(mode, circuits.size(),
               [&](std::size_t i) { reduced[i] = is_reduced(circuits[i], A) ? 1 : 0; });

  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (!reduced[i]) continue;
    rays.push_back(ExtremeRay{CircuitRay{circuits[i], RaySign::minus}});
    if (circuits[i].parity == Parity::odd)
      rays.push_back(ExtremeRay{CircuitRay{circuits[i], RaySign::plus}});
  }
  return rays;
}

std::vector<ExtremeRay> catalog_extreme_rays(const GroundSet& A, Exec mode) {
  return catalog_extreme_rays(A, enumerate_circuits(A, mode), mode);
}

Polynomial canonical_generator(const ExtremeRay& r) {
  Polynomial g;
  if (r.is_monomial()) {
    g.add_term(r.monomial().point, 1);
    return g;
  }
  const auto& cr = r.circuit_ray();
  for (const auto& [point, lambda] : cr.circuit.lambda.entries) g.add_term(point, lambda);
  g.add_term(cr.circuit.beta, cr.sign == RaySign::minus ? Rational(-1) : Rational(1));
  return g;
}

FamilyMember sample_family_member(const CircuitRay& r,
                                  const std::map<LatticePoint, Rational>& coeffs) {
  FamilyMember member;
  member.ray = r;
  member.inner_magnitude = circuit_number(r.circuit, coeffs);  // validates keys
  member.inner_magnitude_approx = member.inner_magnitude.to_double();
  member.inner_sign = r.sign == RaySign::minus ? -1 : 1;
  member.outer_coeffs = coeffs;
  return member;
}

}  // namespace soncray
