#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "soncray/verify.hpp"

namespace soncray {

struct AtlasOptions {
  bool probe = false;
  int samples = 100;
  std::uint64_t seed = 1;
  int probe_depth = 20;  // grid 2^0 .. 2^-depth
  Exec mode = Exec::parallel;
};

struct AtlasResult {
  nlohmann::ordered_json report;
  bool verification_ok = false;
};

// Full pipeline: circuits -> Lambda -> rays -> exposedness decisions ->
// certificates -> exact verification and numeric spot-checks, plus LP probes
// of the unexposed rays when requested.
AtlasResult run_atlas(const GroundSet& A, const AtlasOptions& options);

nlohmann::ordered_json circuits_report(const GroundSet& A, Exec mode = Exec::parallel);

// Lattice plot of a planar ground set: even points filled, odd hollow,
// circuit simplices outlined, reduced circuits highlighted.
std::string diagram_svg(const GroundSet& A);

nlohmann::ordered_json scalar_to_json(const ExactScalar& v);

}  // namespace soncray
