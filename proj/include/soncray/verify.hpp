#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "soncray/exposing.hpp"
#include "soncray/simplex.hpp"

namespace soncray {

struct Certificate {
  ExtremeRay ray;
  ExposingFunctional functional;
  Integer lambda_used;
  GradedPartition partition;
};

Certificate make_certificate(const ExtremeRay& r, const GroundSet& A);
Certificate make_certificate(const ExtremeRay& r, const GroundSet& A,
                             const std::vector<Circuit>& circuits, const Integer& lambda,
                             Exec mode = Exec::parallel);

// Exact signed value of l applied to a polynomial supported on A. The sign is
// always decided; the rational expansion is present whenever every power term
// has a small exponent.
struct EvalValue {
  int sign = 0;
  std::optional<Rational> exact;
};

EvalValue evaluate_on_generator(const ExposingFunctional& l, const Polynomial& g);

// Decides inf over the family { sum c_alpha x^alpha + s Theta(c) x^beta } of
// l via the AM-GM equality analysis; for the certified family the exact
// outcome must be equality to zero.
bool family_positivity(const ExposingFunctional& l, const Circuit& c, RaySign sign,
                       bool is_base_family);

struct CheckRecord {
  std::string subject;
  std::string kind;
  std::string outcome;
  bool ok = false;
};

struct Verdict {
  bool pass = false;
  std::vector<CheckRecord> checks;

  std::vector<CheckRecord> failures() const;
};

Verdict verify_certificate(const Certificate& cert, const GroundSet& A);
Verdict verify_certificate(const Certificate& cert, const GroundSet& A,
                           const std::vector<ExtremeRay>& catalog);

struct FamilySpotcheck {
  CircuitRay family;
  double min_relative_margin = 0;
  bool family_pass = false;
  bool flagged = false;
};

struct SpotcheckReport {
  std::vector<FamilySpotcheck> families;

  bool any_flagged() const;
};

// Random positive coefficient vectors per circuit family, log-uniform in
// [1e-3, 1e3]; floating-point evaluation of l on the sampled members,
// cross-checked against family_positivity.
SpotcheckReport numeric_spotcheck(const Certificate& cert, const GroundSet& A,
                                  int n_samples, std::uint64_t seed);
SpotcheckReport numeric_spotcheck(const Certificate& cert, const GroundSet& A,
                                  const std::vector<ExtremeRay>& catalog, int n_samples,
                                  std::uint64_t seed);

struct ProbePoint {
  Rational t;
  Rational margin;  // exact LP optimum for the grid prefix ending at t
};

// Margin curve of the separation LP: max eps with l(x^gamma) = 0,
// l(g) >= eps on pooled generators plus the f_t probes, |l|_inf <= 1.
std::vector<ProbePoint> unexposedness_probe(const LatticePoint& gamma, const Circuit& witness,
                                            const GroundSet& A,
                                            const std::vector<Rational>& t_grid);
std::vector<ProbePoint> unexposedness_probe(const LatticePoint& gamma, const Circuit& witness,
                                            const GroundSet& A,
                                            const std::vector<Rational>& t_grid,
                                            const std::vector<Circuit>& circuits,
                                            const std::vector<ExtremeRay>& catalog);

std::vector<Rational> default_probe_grid(int k_max = 20);  // 2^0, 2^-1, ..., 2^-k_max

}  // namespace soncray
