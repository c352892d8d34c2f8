#include "soncray/verify.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace soncray {

namespace {

using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<77>>;

Rational rational_pow_small(const Rational& base, const Integer& e) {
  Rational out = 1;
  const unsigned long n = e.convert_to<unsigned long>();
  for (unsigned long i = 0; i < n; ++i) out *= base;
  return out;
}

// Exact dyadic value of an MPFR number.
Rational bigfloat_to_rational(const BigFloat& x) {
  if (x == 0) return Rational(0);
  Integer mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.backend().data(), x.backend().data());
  Rational r(mantissa);
  if (e >= 0)
    r *= Rational(pow(Integer(2), static_cast<unsigned>(e)));
  else
    r /= Rational(pow(Integer(2), static_cast<unsigned>(-e)));
  return r;
}

// Rounds through a 96-bit mantissa so LP coefficients stay small.
Rational dyadic_round(const BigFloat& x) {
  using Narrow = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<29>>;
  return bigfloat_to_rational(BigFloat(Narrow(x)));
}

// One term of an exact evaluation: coeff * base^exponent with a common
// primitive base across the whole sum.
struct PowerTerm {
  Integer exponent;
  Rational coeff;
};

int power_sum_sign(const Rational& base, std::vector<PowerTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const PowerTerm& a, const PowerTerm& b) { return a.exponent > b.exponent; });
  while (!terms.empty()) {
    const PowerTerm& top = terms.front();
    if (terms.size() == 1) return top.coeff.sign();

    // The top term dominates when |c0| base^(m0 - m1) > sum |ci|.
    Rational tail_abs = 0;
    for (std::size_t i = 1; i < terms.size(); ++i) tail_abs += abs(terms[i].coeff);
    std::vector<PowerFactor> cmp;
    cmp.push_back({base, Rational(top.exponent - terms[1].exponent)});
    cmp.push_back({abs(top.coeff), Rational(1)});
    cmp.push_back({tail_abs, Rational(-1)});
    if (sign_of_log_product(cmp) > 0) return top.coeff.sign();

    // No strict domination: expand exactly if affordable.
    const double bits = to_double(top.exponent) *
                        (std::log2(to_double(numerator(base))) + 1.0);
    if (bits > 40000) throw std::logic_error("power sum sign undecidable");
    Rational total = 0;
    for (const auto& t : terms) total += t.coeff * rational_pow_small(base, t.exponent);
    return total.sign();
  }
  return 0;
}

std::string sign_str(int s) { return s < 0 ? "negative" : s > 0 ? "positive" : "zero"; }

}  // namespace

std::vector<CheckRecord> Verdict::failures() const {
  std::vector<CheckRecord> out;
  for (const auto& c : checks)
    if (!c.ok) out.push_back(c);
  return out;
}

bool SpotcheckReport::any_flagged() const {
  for (const auto& f : families)
    if (f.flagged) return true;
  return false;
}

Certificate make_certificate(const ExtremeRay& r, const GroundSet& A,
                             const std::vector<Circuit>& circuits, const Integer& lambda,
                             Exec mode) {
  FunctionalBundle bundle =
      r.is_monomial()
          ? expose_monomial_detail(r.monomial().point, A, circuits, lambda, mode)
          : expose_circuit_ray_detail(r.circuit_ray(), A, circuits, lambda, mode);
  return Certificate{r, std::move(bundle.functional), lambda, std::move(bundle.partition)};
}

Certificate make_certificate(const ExtremeRay& r, const GroundSet& A) {
  const auto circuits = enumerate_circuits(A);
  return make_certificate(r, A, circuits, global_lambda(circuits));
}

EvalValue evaluate_on_generator(const ExposingFunctional& l, const Polynomial& g) {
  Rational rational_part = 0;
  std::optional<Rational> base;  // common primitive base of all power terms
  std::map<Integer, Rational> power_coeffs;

  for (const auto& [point, coeff] : g.terms) {
    auto it = l.values.find(point);
    if (it == l.values.end())
      throw std::invalid_argument("generator support escapes the ground set at " + point.str());
    if (const auto* r = std::get_if<Rational>(&it->second)) {
      rational_part += coeff * *r;
      continue;
    }
    const auto& p = std::get<SignedPower>(it->second);
    auto [primitive, k] = primitive_power_base(p.base);
    if (!base)
      base = primitive;
    else if (*base != primitive)
      throw std::logic_error("mixed power bases in one evaluation");
    power_coeffs[p.exponent * k] += coeff * p.sign;
  }
  for (auto it = power_coeffs.begin(); it != power_coeffs.end();)
    it = it->second == 0 ? power_coeffs.erase(it) : std::next(it);

  if (power_coeffs.empty()) return {rational_part.sign(), rational_part};

  std::vector<PowerTerm> terms;
  for (const auto& [e, c] : power_coeffs) terms.push_back({e, c});
  if (rational_part != 0) terms.push_back({Integer(0), rational_part});

  EvalValue out;
  out.sign = power_sum_sign(*base, terms);
  Integer max_exp = 0;
  for (const auto& t : terms)
    if (t.exponent > max_exp) max_exp = t.exponent;
  if (max_exp <= 64) {
    Rational total = rational_part;
    for (const auto& [e, c] : power_coeffs) total += c * rational_pow_small(*base, e);
    out.exact = total;
  }
  return out;
}

bool family_positivity(const ExposingFunctional& l, const Circuit& c, RaySign sign,
                       bool is_base_family) {
  std::size_t zero_count = 0;
  for (const auto& [point, lambda] : c.lambda.entries) {
    const int s = scalar_sign(l.at(point));
    if (s < 0) return false;  // a family member already violates positivity
    if (s == 0) ++zero_count;
  }
  const int beta_sign =
      (sign == RaySign::minus ? -1 : 1) * scalar_sign(l.at(c.beta));

  if (zero_count > 0) {
    if (is_base_family) return false;
    if (beta_sign > 0) return true;
    return beta_sign == 0 && zero_count < c.lambda.entries.size();
  }

  // All l_alpha > 0: compare prod l_alpha^lambda_alpha against |l_beta|.
  if (beta_sign >= 0) return !is_base_family;
  std::vector<PowerFactor> factors;
  for (const auto& [point, lambda] : c.lambda.entries) {
    const ExactScalar& v = l.at(point);
    if (const auto* r = std::get_if<Rational>(&v)) {
      factors.push_back({*r, lambda});
    } else {
      const auto& p = std::get<SignedPower>(v);
      factors.push_back({p.base, lambda * Rational(p.exponent)});
    }
  }
  const ExactScalar& beta_value = l.at(c.beta);
  if (const auto* r = std::get_if<Rational>(&beta_value)) {
    factors.push_back({abs(*r), Rational(-1)});
  } else {
    const auto& p = std::get<SignedPower>(beta_value);
    factors.push_back({p.base, -Rational(p.exponent)});
  }
  const int cmp = sign_of_log_product(factors);
  return is_base_family ? cmp == 0 : cmp > 0;
}

Verdict verify_certificate(const Certificate& cert, const GroundSet& A,
                           const std::vector<ExtremeRay>& catalog) {
  Verdict verdict;
  auto record = [&](std::string subject, std::string kind, bool ok, std::string outcome) {
    verdict.checks.push_back({std::move(subject), std::move(kind), std::move(outcome), ok});
  };

  // The functional must be keyed by exactly the ground set.
  bool keys_ok = cert.functional.values.size() == A.points.size();
  if (keys_ok)
    for (const auto& p : A.points)
      if (!cert.functional.values.count(p)) keys_ok = false;
  record("functional", "keyed-by-ground-set", keys_ok, keys_ok ? "exact" : "key mismatch");
  if (!keys_ok) {
    verdict.pass = false;
    return verdict;
  }

  // (1) l vanishes on the canonical generator of the certified ray.
  const EvalValue on_self = evaluate_on_generator(cert.functional, canonical_generator(cert.ray));
  record(cert.ray.str(), "generator-annihilation", on_self.sign == 0,
         on_self.exact ? to_string(*on_self.exact) : sign_str(on_self.sign));

  // (2) strict positivity on every other even monomial.
  for (const auto& p : A.points) {
    if (!is_even(p)) continue;
    if (cert.ray.is_monomial() && cert.ray.monomial().point == p) continue;
    const int s = scalar_sign(cert.functional.at(p));
    record("monomial " + p.str(), "monomial-positivity", s > 0, sign_str(s));
  }

  // (3) family positivity for every circuit-ray family; the certified family
  // must sit exactly on the equality locus.
  for (const auto& ray : catalog) {
    if (ray.is_monomial()) continue;
    const auto& cr = ray.circuit_ray();
    const bool is_base = !cert.ray.is_monomial() && cert.ray.circuit_ray() == cr;
    const bool ok = family_positivity(cert.functional, cr.circuit, cr.sign, is_base);
    record(ray.str(), is_base ? "base-family-equality" : "family-positivity", ok,
           ok ? "pass" : "fail");
  }

  verdict.pass = verdict.failures().empty();
  return verdict;
}

Verdict verify_certificate(const Certificate& cert, const GroundSet& A) {
  return verify_certificate(cert, A, catalog_extreme_rays(A));
}

SpotcheckReport numeric_spotcheck(const Certificate& cert, const GroundSet& /*A*/,
                                  const std::vector<ExtremeRay>& catalog, int n_samples,
                                  std::uint64_t seed) {
  SpotcheckReport report;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_coeff(-3.0 * std::log(10.0), 3.0 * std::log(10.0));

  for (const auto& ray : catalog) {
    if (ray.is_monomial()) continue;
    const auto& cr = ray.circuit_ray();
    const bool is_base = !cert.ray.is_monomial() && cert.ray.circuit_ray() == cr;
    const bool family_pass = family_positivity(cert.functional, cr.circuit, cr.sign, is_base);

    // Precompute log2 magnitudes and signs of the functional values involved.
    struct Entry {
      double lambda, value_log2;
      int value_sign;
    };
    std::vector<Entry> entries;
    for (const auto& [point, lambda] : cr.circuit.lambda.entries) {
      const ExactScalar& v = cert.functional.at(point);
      entries.push_back({to_double(lambda), scalar_log2_abs(v), scalar_sign(v)});
    }
    const ExactScalar& beta_value = cert.functional.at(cr.circuit.beta);
    const double beta_log2 = scalar_log2_abs(beta_value);
    const int beta_sign = scalar_sign(beta_value);
    const int inner_sign = cr.sign == RaySign::minus ? -1 : 1;

    double min_margin = std::numeric_limits<double>::infinity();
    for (int s = 0; s < n_samples; ++s) {
      // l(g) = sum c'_alpha l_alpha + s Theta(c') l_beta, in the log2 domain.
      double theta_log2 = 0;
      std::vector<double> coeff_log2(entries.size());
      for (std::size_t i = 0; i < entries.size(); ++i) {
        coeff_log2[i] = log_coeff(rng) / std::log(2.0);
        theta_log2 += entries[i].lambda * (coeff_log2[i] - std::log2(entries[i].lambda));
      }
      double shift = -std::numeric_limits<double>::infinity();
      std::vector<std::pair<double, int>> terms;  // (log2 |term|, sign)
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].value_sign == 0) continue;
        terms.emplace_back(coeff_log2[i] + entries[i].value_log2, entries[i].value_sign);
        shift = std::max(shift, terms.back().first);
      }
      if (beta_sign != 0) {
        terms.emplace_back(theta_log2 + beta_log2, inner_sign * beta_sign);
        shift = std::max(shift, terms.back().first);
      }
      if (terms.empty()) {
        min_margin = std::min(min_margin, 0.0);
        continue;
      }
      double sum = 0, abs_sum = 0;
      for (const auto& [lg, sg] : terms) {
        const double scaled = std::exp2(lg - shift);
        sum += sg * scaled;
        abs_sum += scaled;
      }
      min_margin = std::min(min_margin, sum / abs_sum);
    }

    const bool flagged = (family_pass && min_margin < -1e-9) ||
                         (!family_pass && min_margin > 1e-6);
    report.families.push_back({cr, min_margin, family_pass, flagged});
  }
  return report;
}

SpotcheckReport numeric_spotcheck(const Certificate& cert, const GroundSet& A, int n_samples,
                                  std::uint64_t seed) {
  return numeric_spotcheck(cert, A, catalog_extreme_rays(A), n_samples, seed);
}

std::vector<Rational> default_probe_grid(int k_max) {
  std::vector<Rational> grid;
  Rational t = 1;
  for (int k = 0; k <= k_max; ++k) {
    grid.push_back(t);
    t /= 2;
  }
  return grid;
}

std::vector<ProbePoint> unexposedness_probe(const LatticePoint& gamma, const Circuit& witness,
                                            const GroundSet& A,
                                            const std::vector<Rational>& t_grid,
                                            const std::vector<Circuit>& circuits,
                                            const std::vector<ExtremeRay>& catalog) {
  if (std::find(circuits.begin(), circuits.end(), witness) == circuits.end())
    throw std::invalid_argument("witness is not a circuit on the ground set");
  if (!witness.contains_in_support(gamma) || witness.parity != Parity::even)
    throw std::invalid_argument("witness does not certify unexposedness of " + gamma.str());

  const std::size_t m = A.points.size();
  const std::size_t gamma_index = A.index_of(gamma);

  // Variables: u_0..u_{m-1} with l = u - 1 in [-1, 1], then eps.
  const std::size_t n_vars = m + 1;
  std::vector<LpConstraint> base;

  LpConstraint pin;  // l(x^gamma) = 0
  pin.coeffs.assign(n_vars, Rational(0));
  pin.coeffs[gamma_index] = 1;
  pin.rel = Relation::eq;
  pin.rhs = 1;
  base.push_back(std::move(pin));

  for (std::size_t j = 0; j < m; ++j) {
    LpConstraint ub;
    ub.coeffs.assign(n_vars, Rational(0));
    ub.coeffs[j] = 1;
    ub.rel = Relation::le;
    ub.rhs = 2;
    base.push_back(std::move(ub));
  }

  auto generator_constraint = [&](const Polynomial& g) {
    LpConstraint c;
    c.coeffs.assign(n_vars, Rational(0));
    Rational total = 0;
    for (const auto& [point, coeff] : g.terms) {
      c.coeffs[A.index_of(point)] = coeff;
      total += coeff;
    }
    c.coeffs[m] = -1;  // -eps
    c.rel = Relation::ge;
    c.rhs = total;
    return c;
  };

  for (const auto& ray : catalog) {
    if (ray.is_monomial() && ray.monomial().point == gamma) continue;
    base.push_back(generator_constraint(canonical_generator(ray)));
  }

  const Rational lambda_gamma = witness.lambda.at(gamma);
  const Rational exponent = 1 / (1 - lambda_gamma);

  auto probe_coefficient = [&](const Rational& t) -> Rational {
    // t^(1/(1-lambda_gamma)), exact when the rational power exists.
    const Integer p = numerator(exponent), q = denominator(exponent);
    Integer root_num, root_den;
    if (mpz_root(root_num.backend().data(), numerator(t).backend().data(),
                 q.convert_to<unsigned long>()) != 0 &&
        mpz_root(root_den.backend().data(), denominator(t).backend().data(),
                 q.convert_to<unsigned long>()) != 0) {
      Rational root = Rational(root_num) / root_den;
      return rational_pow_small(root, p);
    }
    const BigFloat ft(t);
    const BigFloat fe(exponent);
    return dyadic_round(pow(ft, fe));
  };

  std::vector<Rational> objective(n_vars, Rational(0));
  objective[m] = 1;

  std::vector<ProbePoint> curve;
  std::vector<LpConstraint> constraints = base;
  for (const Rational& t : t_grid) {
    if (t <= 0) throw std::invalid_argument("probe grid values must be positive");
    Polynomial ft;
    ft.add_term(gamma, lambda_gamma);
    const Rational s_t = probe_coefficient(t);
    for (const auto& [point, lam] : witness.lambda.entries)
      if (point != gamma) ft.add_term(point, lam * s_t);
    ft.add_term(witness.beta, -t);
    constraints.push_back(generator_constraint(ft));

    const LpResult lp = solve_lp(n_vars, objective, /*maximize=*/true, constraints);
    if (lp.status != LpStatus::optimal)
      throw std::logic_error("probe LP did not reach an optimum");
    curve.push_back({t, lp.objective});
  }
  return curve;
}

std::vector<ProbePoint> unexposedness_probe(const LatticePoint& gamma, const Circuit& witness,
                                            const GroundSet& A,
                                            const std::vector<Rational>& t_grid) {
  const auto circuits = enumerate_circuits(A);
  return unexposedness_probe(gamma, witness, A, t_grid, circuits,
                             catalog_extreme_rays(A, circuits));
}

}  // namespace soncray
