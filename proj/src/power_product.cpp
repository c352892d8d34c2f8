#include "soncray/power_product.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>

namespace soncray {

namespace {

using Grouped = std::map<Rational, Rational>;  // primitive base > 1 -> exponent

bool kth_root_exact(const Integer& a, unsigned long k, Integer& root) {
  return mpz_root(root.backend().data(), a.backend().data(), k) != 0;
}

// Combines factors by primitive base; bases below one are inverted first.
Grouped group_factors(const std::vector<PowerFactor>& input) {
  Grouped grouped;
  for (const auto& f : input) {
    if (f.base <= 0) throw std::domain_error("power factor base must be positive");
    if (f.base == 1 || f.exponent == 0) continue;
    Rational base = f.base;
    Rational exponent = f.exponent;
    if (base < 1) {
      base = 1 / base;
      exponent = -exponent;
    }
    auto [primitive, k] = primitive_power_base(base);
    grouped[primitive] += exponent * static_cast<long>(k);
  }
  for (auto it = grouped.begin(); it != grouped.end();)
    it = it->second == 0 ? grouped.erase(it) : std::next(it);
  return grouped;
}

int double_interval_sign(const Grouped& grouped) {
  double sum = 0, abs_sum = 0;
  for (const auto& [base, exponent] : grouped) {
    const double t = to_double(exponent) * std::log(to_double(base));
    sum += t;
    abs_sum += std::fabs(t);
  }
  const double err = abs_sum * 1e-12 + 1e-280;
  if (std::isnan(sum)) return 0;
  if (sum > err) return 1;
  if (sum < -err) return -1;
  return 0;
}

template <unsigned Digits10>
int mpfr_interval_sign(const Grouped& grouped) {
  using F = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits10>>;
  F sum(0), abs_sum(0);
  for (const auto& [base, exponent] : grouped) {
    const F t = F(exponent) * log(F(base));
    sum += t;
    abs_sum += abs(t);
  }
  const int guard_bits = static_cast<int>(Digits10 * 3.32) - 40;
  const F err = abs_sum * pow(F(2), -guard_bits) + pow(F(2), -4 * guard_bits);
  if (sum > err) return 1;
  if (sum < -err) return -1;
  return 0;
}

// Clears exponent denominators and compares big integers directly, when the
// resulting integers stay below the bit budget.
std::optional<int> exact_clearing_sign(const Grouped& grouped) {
  Integer q = 1;
  for (const auto& [base, exponent] : grouped) {
    const Integer den = denominator(exponent);
    q = q / gcd(q, den) * den;
  }
  if (bit_length(q) > 30) return std::nullopt;

  double bits = 0;
  std::vector<std::pair<Rational, Integer>> cleared;
  for (const auto& [base, exponent] : grouped) {
    Integer p = numerator(exponent) * (q / denominator(exponent));
    bits += std::fabs(to_double(p)) *
            static_cast<double>(bit_length(numerator(base)) + bit_length(denominator(base)));
    cleared.emplace_back(base, std::move(p));
  }
  if (bits > double(1 << 22)) return std::nullopt;

  Integer lhs = 1, rhs = 1;
  for (const auto& [base, p] : cleared) {
    const unsigned long e = static_cast<unsigned long>(abs(p).convert_to<unsigned long long>());
    if (p > 0) {
      lhs *= pow(numerator(base), e);
      rhs *= pow(denominator(base), e);
    } else {
      lhs *= pow(denominator(base), e);
      rhs *= pow(numerator(base), e);
    }
  }
  if (lhs > rhs) return 1;
  if (lhs < rhs) return -1;
  return 0;
}

bool factor_completely(Integer v, std::map<Integer, long>& powers, long multiplier) {
  for (Integer p = 2; p * p <= v && p < 1000000; p += (p == 2 ? 1 : 2)) {
    while (v % p == 0) {
      powers[p] += multiplier;
      v /= p;
    }
  }
  if (v == 1) return true;
  if (bit_length(v) <= 20 || mpz_probab_prime_p(v.backend().data(), 25) != 0) {
    powers[v] += multiplier;
    return true;
  }
  return false;
}

// True when the grouped product is provably 1 via prime factorization of all
// bases. False means unknown or provably different from 1.
bool provably_one(const Grouped& grouped) {
  std::map<Integer, Rational> prime_exponents;
  for (const auto& [base, exponent] : grouped) {
    std::map<Integer, long> powers;
    if (!factor_completely(numerator(base), powers, 1)) return false;
    if (!factor_completely(denominator(base), powers, -1)) return false;
    for (const auto& [prime, mult] : powers)
      prime_exponents[prime] += exponent * mult;
  }
  for (const auto& [prime, total] : prime_exponents)
    if (total != 0) return false;
  return true;
}

}  // namespace

void PowerProduct::push(Rational base, Rational exponent) {
  if (base <= 0) throw std::invalid_argument("power product base must be positive");
  factors.push_back({std::move(base), std::move(exponent)});
}

double PowerProduct::to_double() const {
  double log_sum = 0;
  for (const auto& f : factors) log_sum += soncray::to_double(f.exponent) * std::log(soncray::to_double(f.base));
  return std::exp(log_sum);
}

std::pair<Rational, unsigned> primitive_power_base(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (num <= 0) throw std::domain_error("base must be positive");
  if (num == den) return {Rational(1), 1};

  std::size_t kmax = 0;
  if (num > 1) kmax = bit_length(num) - 1;
  if (den > 1) {
    const std::size_t kd = bit_length(den) - 1;
    kmax = (num > 1) ? std::min(kmax, kd) : kd;
  }
  for (std::size_t k = kmax; k >= 2; --k) {
    Integer rn, rd;
    if (kth_root_exact(num, k, rn) && kth_root_exact(den, k, rd))
      return {Rational(rn) / rd, static_cast<unsigned>(k)};
  }
  return {value, 1};
}

int sign_of_log_product(const std::vector<PowerFactor>& factors) {
  const Grouped grouped = group_factors(factors);
  if (grouped.empty()) return 0;

  // All bases exceed one after grouping, so uniform exponent signs decide.
  bool any_pos = false, any_neg = false;
  for (const auto& [base, exponent] : grouped)
    (exponent > 0 ? any_pos : any_neg) = true;
  if (!any_neg) return 1;
  if (!any_pos) return -1;

  if (int s = double_interval_sign(grouped)) return s;
  if (auto s = exact_clearing_sign(grouped)) return *s;
  if (int s = mpfr_interval_sign<80>(grouped)) return s;
  if (int s = mpfr_interval_sign<320>(grouped)) return s;
  if (int s = mpfr_interval_sign<1250>(grouped)) return s;
  if (provably_one(grouped)) return 0;
  if (int s = mpfr_interval_sign<5000>(grouped)) return s;
  if (int s = mpfr_interval_sign<20000>(grouped)) return s;
  throw std::runtime_error("power product comparison undecided");
}

Ordering power_product_compare(const PowerProduct& value, const Rational& r) {
  if (r < 0) throw std::invalid_argument("comparison against a negative rational");
  for (const auto& f : value.factors)
    if (f.base <= 0) throw std::domain_error("power factor base must be positive");
  if (r == 0) return Ordering::greater;

  std::vector<PowerFactor> factors = value.factors;
  if (r != 1) factors.push_back({r, Rational(-1)});
  const int s = sign_of_log_product(factors);
  return s < 0 ? Ordering::less : s > 0 ? Ordering::greater : Ordering::equal;
}

}  // namespace soncray
