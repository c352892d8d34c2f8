#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "soncray/rays.hpp"

using namespace soncray;

namespace {

GroundSet univariate() { return GroundSet::from_coords(1, {{0}, {2}, {4}, {6}}); }
GroundSet motzkin() { return GroundSet::from_coords(2, {{0, 0}, {4, 2}, {2, 4}, {2, 2}}); }

}  // namespace

TEST_CASE("catalog_extreme_rays on the golden instances") {
  const auto uni = catalog_extreme_rays(univariate());
  REQUIRE(uni.size() == 6);  // 4 monomials + 2 reduced even circuits, minus only
  for (int i = 0; i < 4; ++i) CHECK(uni[static_cast<std::size_t>(i)].is_monomial());
  CHECK(uni[4].circuit_ray().sign == RaySign::minus);
  CHECK(uni[4].circuit_ray().circuit.support == std::vector<LatticePoint>{{0}, {4}});
  CHECK(uni[5].circuit_ray().circuit.support == std::vector<LatticePoint>{{2}, {6}});

  const auto odd = catalog_extreme_rays(GroundSet::from_coords(1, {{0}, {1}, {2}}));
  REQUIRE(odd.size() == 4);  // {1, x^2} + the odd circuit with both signs
  CHECK(odd[0].is_monomial());
  CHECK(odd[1].is_monomial());
  CHECK(odd[2].circuit_ray().sign == RaySign::minus);
  CHECK(odd[3].circuit_ray().sign == RaySign::plus);

  CHECK(catalog_extreme_rays(motzkin()).size() == 5);
}

TEST_CASE("plus families appear exactly for odd circuits") {
  auto corpus = testing::fuzz_corpus(40, 1213);
  for (const auto& A : corpus) {
    const auto circuits = enumerate_circuits(A);
    const auto catalog = catalog_extreme_rays(A, circuits);
    CHECK(catalog == catalog_extreme_rays(A, circuits, Exec::serial));
    for (const auto& ray : catalog) {
      if (ray.is_monomial()) {
        CHECK(is_even(ray.monomial().point));
        CHECK(A.contains(ray.monomial().point));
      } else {
        const auto& cr = ray.circuit_ray();
        CHECK(is_reduced(cr.circuit, A));
        if (cr.sign == RaySign::plus) CHECK(cr.circuit.parity == Parity::odd);
      }
    }
  }
}

TEST_CASE("canonical_generator fixes the inner coefficient to one") {
  const ExtremeRay mono{MonomialRay{LatticePoint{2, 2}}};
  const auto g = canonical_generator(mono);
  REQUIRE(g.terms.size() == 1);
  CHECK(g.terms.at(LatticePoint{2, 2}) == 1);

  const auto uni = catalog_extreme_rays(univariate());
  const auto gen = canonical_generator(uni[4]);  // ({0,4},2) minus
  CHECK(gen.terms.at(LatticePoint{0}) == Rational(1, 2));
  CHECK(gen.terms.at(LatticePoint{4}) == Rational(1, 2));
  CHECK(gen.terms.at(LatticePoint{2}) == -1);

  const auto odd = catalog_extreme_rays(GroundSet::from_coords(1, {{0}, {1}, {2}}));
  const auto plus = canonical_generator(odd[3]);
  CHECK(plus.terms.at(LatticePoint{1}) == 1);
}

TEST_CASE("sample_family_member carries the exact inner magnitude") {
  const auto mz = catalog_extreme_rays(motzkin());
  const auto& cr = mz[4].circuit_ray();

  const auto canonical = sample_family_member(cr, canonical_coefficients(cr.circuit));
  CHECK(power_product_compare(canonical.inner_magnitude, 1) == Ordering::equal);
  CHECK(canonical.inner_sign == -1);

  std::map<LatticePoint, Rational> unit;
  for (const auto& p : cr.circuit.support) unit.emplace(p, 1);
  const auto member = sample_family_member(cr, unit);
  CHECK(power_product_compare(member.inner_magnitude, 3) == Ordering::equal);

  const auto uni = catalog_extreme_rays(univariate());
  std::map<LatticePoint, Rational> twos{{{0}, 2}, {{4}, 2}};
  const auto scaled = sample_family_member(uni[4].circuit_ray(), twos);
  CHECK(power_product_compare(scaled.inner_magnitude, 4) == Ordering::equal);

  std::map<LatticePoint, Rational> wrong{{{0}, 1}, {{6}, 1}};
  CHECK_THROWS_AS(sample_family_member(uni[4].circuit_ray(), wrong), std::invalid_argument);
}

TEST_CASE("canonical circuit generators are nonnegative on the positive orthant") {
  auto corpus = testing::fuzz_corpus(25, 777, 2, 6);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> log_x(std::log(0.1), std::log(10.0));

  int generators_checked = 0;
  for (const auto& A : corpus) {
    for (const auto& ray : catalog_extreme_rays(A)) {
      if (ray.is_monomial()) continue;
      if (ray.circuit_ray().sign == RaySign::plus) continue;
      const auto g = canonical_generator(ray);
      ++generators_checked;
      for (int s = 0; s < 2000; ++s) {
        std::vector<double> x(static_cast<std::size_t>(A.n));
        for (auto& v : x) v = std::exp(log_x(rng));
        const double value = g.eval(x);
        const double scale = g.abs_scale(x);
        CHECK(value >= -1e-9 * scale);
      }
    }
  }
  CHECK(generators_checked > 3);
}

TEST_CASE("catalog construction is deterministic") {
  const auto A = motzkin();
  const auto first = catalog_extreme_rays(A);
  const auto second = catalog_extreme_rays(A);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
}
