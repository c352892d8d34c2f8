#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "soncray/verify.hpp"

using namespace soncray;

namespace {

GroundSet univariate() { return GroundSet::from_coords(1, {{0}, {2}, {4}, {6}}); }
GroundSet motzkin() { return GroundSet::from_coords(2, {{0, 0}, {4, 2}, {2, 4}, {2, 2}}); }
GroundSet odd_set() { return GroundSet::from_coords(1, {{0}, {1}, {2}}); }

const ExtremeRay& find_monomial(const std::vector<ExtremeRay>& catalog,
                                const LatticePoint& p) {
  for (const auto& r : catalog)
    if (r.is_monomial() && r.monomial().point == p) return r;
  throw std::logic_error("monomial ray not found");
}

}  // namespace

TEST_CASE("evaluate_on_generator computes exact signed sums") {
  const auto M = motzkin();
  const auto catalog = catalog_extreme_rays(M);
  const auto cert = make_certificate(catalog.back(), M);

  const auto self = evaluate_on_generator(cert.functional, canonical_generator(catalog.back()));
  CHECK(self.sign == 0);
  REQUIRE(self.exact.has_value());
  CHECK(*self.exact == 0);

  const auto B = odd_set();
  const auto bcat = catalog_extreme_rays(B);
  const auto bcert = make_certificate(find_monomial(bcat, {0}), B);
  Polynomial x2;
  x2.add_term({2}, 1);
  const auto on_x2 = evaluate_on_generator(bcert.functional, x2);
  CHECK(on_x2.sign > 0);
  REQUIRE(on_x2.exact.has_value());
  CHECK(*on_x2.exact == 8);

  const auto zero = evaluate_on_generator(bcert.functional, Polynomial{});
  CHECK(zero.sign == 0);

  Polynomial escape;
  escape.add_term({7}, 1);
  CHECK_THROWS_AS(evaluate_on_generator(bcert.functional, escape), std::invalid_argument);
}

TEST_CASE("evaluate mixes rational and tower terms with exact dominance") {
  const auto A = univariate();
  const auto catalog = catalog_extreme_rays(A);
  const auto cert = make_certificate(catalog[4], A);  // ({0,4},2) minus

  // generator of ({2,6},4): value (1/2)*2 + (1/2)*256 - 1*2 = 127
  const auto other = evaluate_on_generator(cert.functional, canonical_generator(catalog[5]));
  CHECK(other.sign > 0);
  REQUIRE(other.exact.has_value());
  CHECK(*other.exact == 127);
}

TEST_CASE("evaluate agrees with a float dot product when values are small") {
  auto corpus = testing::fuzz_corpus(25, 1999);
  for (const auto& A : corpus) {
    const auto circuits = enumerate_circuits(A);
    const Integer lambda = global_lambda(circuits);
    const auto catalog = catalog_extreme_rays(A, circuits);
    for (const auto& ray : catalog) {
      if (ray.is_monomial()) continue;
      const auto cert = make_certificate(ray, A, circuits, lambda);
      for (const auto& other : catalog) {
        const auto g = canonical_generator(other);
        const auto exact = evaluate_on_generator(cert.functional, g);
        if (!exact.exact) continue;
        const double expanded = to_double(*exact.exact);
        if (std::fabs(expanded) > 1e15) continue;
        double approx = 0;
        for (const auto& [point, coeff] : g.terms) {
          const auto v = scalar_to_rational(cert.functional.at(point), 64);
          if (!v) {
            approx = expanded;  // tower too large for the float route
            break;
          }
          approx += to_double(coeff) * to_double(*v);
        }
        const double scale = std::max(1.0, std::fabs(expanded));
        CHECK(std::fabs(approx - expanded) <= 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("family_positivity case analysis on documented examples") {
  const auto B = odd_set();
  const auto bcat = catalog_extreme_rays(B);
  const auto bcircuits = enumerate_circuits(B);
  const auto bcert = make_certificate(find_monomial(bcat, {0}), B);
  // l-values (0, 8) on S, l(x) = 0: zero branch with a positive companion
  CHECK(family_positivity(bcert.functional, bcircuits[0], RaySign::plus, false));
  CHECK(family_positivity(bcert.functional, bcircuits[0], RaySign::minus, false));

  const auto M = motzkin();
  const auto mcat = catalog_extreme_rays(M);
  const auto mcert = make_certificate(mcat.back(), M);
  CHECK(family_positivity(mcert.functional, mcat.back().circuit_ray().circuit, RaySign::minus,
                          true));  // exact equality on the base family

  const auto A = univariate();
  const auto acat = catalog_extreme_rays(A);
  const auto acert = make_certificate(acat[4], A);
  // family ({2,6},4): sqrt(2 * 256) - 2 > 0 since 512 > 4
  CHECK(pow(Integer(2), 9) > pow(Integer(2), 2));
  CHECK(family_positivity(acert.functional, acat[5].circuit_ray().circuit, RaySign::minus,
                          false));
}

TEST_CASE("verify_certificate passes on all golden certificates") {
  for (const auto& A : {univariate(), motzkin(), odd_set()}) {
    const auto circuits = enumerate_circuits(A);
    const Integer lambda = global_lambda(circuits);
    const auto catalog = catalog_extreme_rays(A, circuits);
    for (const auto& ray : catalog) {
      if (!decide_exposed(ray, A, circuits, catalog).exposed) continue;
      const auto cert = make_certificate(ray, A, circuits, lambda);
      const auto verdict = verify_certificate(cert, A, catalog);
      CAPTURE(ray.str());
      CHECK(verdict.pass);
      CHECK(verdict.failures().empty());
    }
  }
}

TEST_CASE("tampered certificates fail verification") {
  const auto M = motzkin();
  const auto catalog = catalog_extreme_rays(M);

  auto tampered = make_certificate(catalog.back(), M);
  tampered.functional.values[LatticePoint{2, 2}] = Rational(3);
  const auto verdict = verify_certificate(tampered, M, catalog);
  CHECK_FALSE(verdict.pass);
  bool base_family_failed = false;
  for (const auto& f : verdict.failures())
    if (f.kind == "base-family-equality") base_family_failed = true;
  CHECK(base_family_failed);

  const auto B = odd_set();
  const auto bcat = catalog_extreme_rays(B);
  auto zeroed = make_certificate(find_monomial(bcat, {0}), B);
  zeroed.functional.values[LatticePoint{2}] = Rational(0);
  const auto bverdict = verify_certificate(zeroed, B, bcat);
  CHECK_FALSE(bverdict.pass);
  bool monomial_failed = false;
  for (const auto& f : bverdict.failures())
    if (f.kind == "monomial-positivity") monomial_failed = true;
  CHECK(monomial_failed);
}

TEST_CASE("single-unit mutations on the generator support flip the verdict") {
  auto corpus = testing::fuzz_corpus(20, 86753);
  std::mt19937_64 rng(13);
  int mutations = 0;
  for (const auto& A : corpus) {
    const auto circuits = enumerate_circuits(A);
    const Integer lambda = global_lambda(circuits);
    const auto catalog = catalog_extreme_rays(A, circuits);
    for (const auto& ray : catalog) {
      if (!decide_exposed(ray, A, circuits, catalog).exposed) continue;
      const auto cert = make_certificate(ray, A, circuits, lambda);
      REQUIRE(verify_certificate(cert, A, catalog).pass);

      // perturb one functional value on the certified generator's support
      const auto g = canonical_generator(ray);
      auto it = g.terms.begin();
      std::advance(it, static_cast<long>(rng() % g.terms.size()));
      const auto target = it->first;
      auto mutated = cert;
      const auto original = scalar_to_rational(mutated.functional.at(target));
      REQUIRE(original.has_value());  // support values are rational by construction
      mutated.functional.values[target] = *original + (rng() % 2 == 0 ? 1 : -1);
      CHECK_FALSE(verify_certificate(mutated, A, catalog).pass);
      if (++mutations >= 25) return;
    }
  }
  CHECK(mutations > 10);
}

TEST_CASE("numeric_spotcheck stays consistent with the exact analysis") {
  const auto M = motzkin();
  const auto catalog = catalog_extreme_rays(M);
  const auto cert = make_certificate(catalog.back(), M);
  const auto report = numeric_spotcheck(cert, M, catalog, 100, 4242);
  REQUIRE(report.families.size() == 1);
  CHECK(report.families[0].min_relative_margin > 0);
  CHECK_FALSE(report.families[0].flagged);

  auto tampered = cert;
  tampered.functional.values[LatticePoint{2, 2}] = Rational(3);
  const auto bad = numeric_spotcheck(tampered, M, catalog, 400, 4242);
  REQUIRE(bad.families.size() == 1);
  CHECK(bad.families[0].min_relative_margin < 0);

  const auto C = GroundSet::from_coords(2, {{0, 0}, {2, 2}});
  const auto ccat = catalog_extreme_rays(C);
  const auto ccert = make_certificate(ccat[0], C);
  CHECK(numeric_spotcheck(ccert, C, ccat, 50, 1).families.empty());
}

TEST_CASE("unexposedness_probe produces a decaying margin curve") {
  const auto A = univariate();
  const auto circuits = enumerate_circuits(A);
  const auto catalog = catalog_extreme_rays(A, circuits);

  const auto decision = decide_exposed(find_monomial(catalog, {4}), A, circuits, catalog);
  REQUIRE_FALSE(decision.exposed);

  const auto coarse = unexposedness_probe({4}, *decision.witness, A, {Rational(1)}, circuits,
                                          catalog);
  REQUIRE(coarse.size() == 1);
  CHECK(coarse[0].margin > 0);  // a single constraint leaves slack

  const auto curve = unexposedness_probe({4}, *decision.witness, A, default_probe_grid(20),
                                         circuits, catalog);
  REQUIRE(curve.size() == 21);
  for (std::size_t i = 1; i < curve.size(); ++i) CHECK(curve[i].margin <= curve[i - 1].margin);
  CHECK(curve.back().margin <= Rational(1, 1000000));

  // an exposed ray has no valid witness: the probe must refuse
  const auto B = odd_set();
  const auto bcircuits = enumerate_circuits(B);
  const auto bcat = catalog_extreme_rays(B, bcircuits);
  CHECK_THROWS_AS(
      unexposedness_probe({2}, bcircuits[0], B, {Rational(1)}, bcircuits, bcat),
      std::invalid_argument);
}
