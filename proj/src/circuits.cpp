#include "soncray/circuits.hpp"

#include <algorithm>
#include <stdexcept>

namespace soncray {

namespace {

// Index combinations of size k from [0, m), in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > m) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

bool Circuit::contains_in_support(const LatticePoint& p) const {
  return std::binary_search(support.begin(), support.end(), p);
}

std::string Circuit::str() const {
  std::string out = "({";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i) out += ',';
    out += support[i].str();
  }
  out += "} -> " + beta.str() + ")";
  return out;
}

std::vector<Circuit> enumerate_circuits(const GroundSet& A, Exec mode) {
  const auto evens = even_subset(A);
  const std::size_t m = evens.size();
  const std::size_t kmax = std::min<std::size_t>(static_cast<std::size_t>(A.n) + 1, m);

  std::vector<std::vector<std::size_t>> candidates;
  for (std::size_t k = 2; k <= kmax; ++k) {
    auto combos = combinations(m, k);
    candidates.insert(candidates.end(), combos.begin(), combos.end());
  }

  std::vector<std::vector<Circuit>> found(candidates.size());
  parallel_for(mode, candidates.size(), [&](std::size_t ci) {
    std::vector<LatticePoint> support;
    support.reserve(candidates[ci].size());
    for (std::size_t idx : candidates[ci]) support.push_back(evens[idx]);
    if (!affinely_independent(support)) return;
    for (const auto& beta : A.points) {
      if (std::binary_search(support.begin(), support.end(), beta)) continue;
      auto coords = barycentric_coordinates(support, beta);
      if (!coords) continue;
      found[ci].push_back(Circuit{support, beta, std::move(*coords),
                                  is_even(beta) ? Parity::even : Parity::odd});
    }
  });

  std::vector<Circuit> circuits;
  for (auto& bucket : found)
    for (auto& c : bucket) circuits.push_back(std::move(c));
  std::sort(circuits.begin(), circuits.end());
  return circuits;
}

bool is_reduced(const Circuit& c, const GroundSet& A) {
  for (const auto& p : A.points) {
    if (!is_even(p)) continue;
    if (p == c.beta || c.contains_in_support(p)) continue;
    if (in_convex_hull(c.support, p)) return false;
  }
  return true;
}

Integer global_lambda(const std::vector<Circuit>& circuits) {
  if (circuits.empty()) return 2;  // sentinel; no layer exponents are formed
  Rational min_lambda = circuits.front().lambda.min_coordinate();
  for (const auto& c : circuits) {
    const Rational m = c.lambda.min_coordinate();
    if (m < min_lambda) min_lambda = m;
  }
  return rational_ceil(1 / min_lambda) + 1;
}

Integer global_lambda(const GroundSet& A) { return global_lambda(enumerate_circuits(A)); }

PowerProduct circuit_number(const Circuit& c, const std::map<LatticePoint, Rational>& coeffs) {
  if (coeffs.size() != c.support.size())
    throw std::invalid_argument("coefficient keys must match the circuit support");
  PowerProduct theta;
  for (const auto& [point, lambda] : c.lambda.entries) {
    auto it = coeffs.find(point);
    if (it == coeffs.end())
      throw std::invalid_argument("missing coefficient for " + point.str());
    if (it->second <= 0)
      throw std::invalid_argument("nonpositive coefficient at " + point.str());
    theta.push(it->second / lambda, lambda);
  }
  return theta;
}

bool circuit_nonneg(const Circuit& c, const std::map<LatticePoint, Rational>& coeffs,
                    const Rational& d) {
  return power_product_compare(circuit_number(c, coeffs), abs(d)) != Ordering::less;
}

std::map<LatticePoint, Rational> canonical_coefficients(const Circuit& c) {
  std::map<LatticePoint, Rational> coeffs;
  for (const auto& [point, lambda] : c.lambda.entries) coeffs.emplace(point, lambda);
  return coeffs;
}

}  // namespace soncray
