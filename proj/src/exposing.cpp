#include "soncray/exposing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace soncray {

namespace {

double log2_of_integer(const Integer& z) {
  signed long exp2 = 0;
  const double d = mpz_get_d_2exp(&exp2, z.backend().data());
  return std::log2(std::fabs(d)) + static_cast<double>(exp2);
}

Integer integer_pow(const Integer& base, int e) {
  Integer out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

Rational rational_pow(const Rational& base, const Integer& e) {
  const unsigned long n = e.convert_to<unsigned long>();
  Rational out = 1;
  for (unsigned long i = 0; i < n; ++i) out *= base;
  return out;
}

std::optional<Circuit> find_unexposedness_witness(const LatticePoint& gamma,
                                                  const std::vector<Circuit>& circuits) {
  for (const auto& c : circuits)
    if (c.parity == Parity::even && c.contains_in_support(gamma)) return c;
  return std::nullopt;
}

}  // namespace

int scalar_sign(const ExactScalar& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->sign();
  return std::get<SignedPower>(v).sign;  // base > 1, so the power is nonzero
}

std::optional<Rational> scalar_to_rational(const ExactScalar& v, unsigned max_exponent) {
  if (const auto* r = std::get_if<Rational>(&v)) return *r;
  const auto& p = std::get<SignedPower>(v);
  if (p.exponent > max_exponent) return std::nullopt;
  return p.sign * rational_pow(p.base, p.exponent);
}

double scalar_log2_abs(const ExactScalar& v) {
  if (const auto* r = std::get_if<Rational>(&v)) {
    if (*r == 0) return -std::numeric_limits<double>::infinity();
    return log2_of_integer(numerator(*r)) - log2_of_integer(denominator(*r));
  }
  const auto& p = std::get<SignedPower>(v);
  const double base_log2 =
      log2_of_integer(numerator(p.base)) - log2_of_integer(denominator(p.base));
  return to_double(p.exponent) * base_log2;
}

const ExactScalar& ExposingFunctional::at(const LatticePoint& p) const {
  auto it = values.find(p);
  if (it == values.end())
    throw std::invalid_argument("functional has no value at " + p.str());
  return it->second;
}

ExposednessDecision decide_exposed(const ExtremeRay& r, const GroundSet& /*A*/,
                                   const std::vector<Circuit>& circuits,
                                   const std::vector<ExtremeRay>& catalog) {
  if (std::find(catalog.begin(), catalog.end(), r) == catalog.end())
    throw std::invalid_argument("ray not in catalog: " + r.str());
  if (!r.is_monomial()) return {r, true, std::nullopt};
  auto witness = find_unexposedness_witness(r.monomial().point, circuits);
  if (witness) return {r, false, std::move(witness)};
  return {r, true, std::nullopt};
}

ExposednessDecision decide_exposed(const ExtremeRay& r, const GroundSet& A) {
  const auto circuits = enumerate_circuits(A);
  return decide_exposed(r, A, circuits, catalog_extreme_rays(A, circuits));
}

FunctionalBundle expose_monomial_detail(const LatticePoint& gamma, const GroundSet& A,
                                        const std::vector<Circuit>& circuits,
                                        const Integer& lambda, Exec mode) {
  if (!A.contains(gamma) || !is_even(gamma))
    throw std::invalid_argument("not an even ground-set point: " + gamma.str());
  if (find_unexposedness_witness(gamma, circuits))
    throw std::invalid_argument("monomial ray " + gamma.str() + " is not exposed");

  auto initial = even_subset(A);
  GradedPartition partition = graded_partition(std::move(initial), {gamma}, mode);

  ExposingFunctional l;
  for (const auto& p : A.points) l.values.emplace(p, Rational(0));
  for (int i = 1; i <= partition.depth(); ++i) {
    const Integer layer_exponent = integer_pow(lambda, i);
    for (const auto& p : partition.layers[static_cast<std::size_t>(i)])
      l.values[p] = SignedPower{1, Rational(2), layer_exponent};
  }
  return {std::move(l), std::move(partition)};
}

ExposingFunctional expose_monomial(const LatticePoint& gamma, const GroundSet& A) {
  const auto circuits = enumerate_circuits(A);
  return expose_monomial_detail(gamma, A, circuits, global_lambda(circuits), Exec::parallel)
      .functional;
}

SigmaDelta choose_sigma_delta(const CircuitRay& r,
                              const std::map<LatticePoint, Rational>& coeffs) {
  const PowerProduct theta = circuit_number(r.circuit, coeffs);  // validates coeffs

  Rational min_ratio, max_ratio;
  bool first = true;
  for (const auto& [point, lambda] : r.circuit.lambda.entries) {
    const Rational ratio = lambda / coeffs.at(point);
    if (first || ratio < min_ratio) min_ratio = ratio;
    if (first || ratio > max_ratio) max_ratio = ratio;
    first = false;
  }

  // sigma < Theta^-1  iff  Theta * sigma < 1.
  const auto against_theta = [&](const Rational& s) {
    auto factors = theta.factors;
    factors.push_back({s, Rational(1)});
    return sign_of_log_product(factors);
  };

  Rational sigma(1, 2);
  while (!(sigma < min_ratio && against_theta(sigma) < 0)) sigma /= 2;
  Rational delta(2);
  while (!(delta > max_ratio && against_theta(delta) > 0)) delta *= 2;
  return {std::move(sigma), std::move(delta)};
}

FunctionalBundle expose_circuit_ray_detail(const CircuitRay& r, const GroundSet& A,
                                           const std::vector<Circuit>& /*circuits*/,
                                           const Integer& lambda, Exec mode) {
  if (r.circuit.support.size() < 2)
    throw std::invalid_argument("circuit support must have at least two points");
  if (!is_reduced(r.circuit, A))
    throw std::invalid_argument("circuit is not reduced: " + r.circuit.str());

  const auto coeffs = canonical_coefficients(r.circuit);
  const SigmaDelta sd = choose_sigma_delta(r, coeffs);  // (1/2, 2) for canonical
  const Rational inv_sigma = 1 / sd.sigma;
  const Rational tower_base = inv_sigma * sd.delta;

  std::vector<LatticePoint> initial = even_subset(A);
  initial.push_back(r.circuit.beta);
  std::vector<LatticePoint> keep = r.circuit.support;
  keep.push_back(r.circuit.beta);
  GradedPartition partition = graded_partition(std::move(initial), std::move(keep), mode);

  ExposingFunctional l;
  for (const auto& p : A.points) l.values.emplace(p, Rational(0));
  for (const auto& [point, lam] : r.circuit.lambda.entries)
    l.values[point] = inv_sigma * lam / coeffs.at(point);
  // Theta = 1 for canonical coefficients; sign opposite to the generator's
  // beta coefficient.
  l.values[r.circuit.beta] =
      r.sign == RaySign::minus ? inv_sigma : Rational(-inv_sigma);
  for (int i = 1; i <= partition.depth(); ++i) {
    const Integer layer_exponent = integer_pow(lambda, i);
    for (const auto& p : partition.layers[static_cast<std::size_t>(i)])
      l.values[p] = SignedPower{1, tower_base, layer_exponent};
  }
  return {std::move(l), std::move(partition)};
}

ExposingFunctional expose_circuit_ray(const CircuitRay& r, const GroundSet& A) {
  const auto circuits = enumerate_circuits(A);
  return expose_circuit_ray_detail(r, A, circuits, global_lambda(circuits), Exec::parallel)
      .functional;
}

}  // namespace soncray
