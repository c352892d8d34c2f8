#pragma once

#include <utility>
#include <vector>

#include "soncray/rational.hpp"

namespace soncray {

enum class Ordering { less, equal, greater };

struct PowerFactor {
  Rational base;  // > 0
  Rational exponent;
};

// Exact positive real  prod_i base_i ^ exponent_i.
struct PowerProduct {
  std::vector<PowerFactor> factors;

  static PowerProduct one() { return {}; }
  void push(Rational base, Rational exponent);
  double to_double() const;
};

// Sign of sum_i exponent_i * ln(base_i), i.e. the exact comparison of the
// product against 1. Same-base factors are combined exactly first; mixed-base
// cases go through a certified floating-point interval prefilter, big-integer
// clearing of the exponent denominators when the result stays small, and
// escalating-precision interval arithmetic otherwise.
int sign_of_log_product(const std::vector<PowerFactor>& factors);

// Exact ordering of the product value against a rational r >= 0.
Ordering power_product_compare(const PowerProduct& value, const Rational& r);

// Largest k >= 1 with value = root^k over the positive rationals.
std::pair<Rational, unsigned> primitive_power_base(const Rational& value);

}  // namespace soncray
