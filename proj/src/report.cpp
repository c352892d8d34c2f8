#include "soncray/report.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

namespace soncray {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json point_json(const LatticePoint& p) { return Json(p.coords); }

Json circuit_json(const Circuit& c, std::size_t index, bool reduced) {
  Json out;
  out["index"] = index;
  auto support = Json::array();
  auto lambdas = Json::array();
  for (const auto& [point, lambda] : c.lambda.entries) {
    support.push_back(point_json(point));
    lambdas.push_back(to_string(lambda));
  }
  out["S"] = std::move(support);
  out["beta"] = point_json(c.beta);
  out["lambda"] = std::move(lambdas);
  out["parity"] = c.parity == Parity::even ? "even" : "odd";
  out["reduced"] = reduced;
  return out;
}

Json ray_json(const ExtremeRay& r, std::size_t index,
              const std::vector<Circuit>& circuits) {
  Json out;
  out["index"] = index;
  if (r.is_monomial()) {
    out["kind"] = "monomial";
    out["point"] = point_json(r.monomial().point);
  } else {
    const auto& cr = r.circuit_ray();
    out["kind"] = "circuit";
    const auto it = std::find(circuits.begin(), circuits.end(), cr.circuit);
    out["circuit"] = static_cast<std::size_t>(it - circuits.begin());
    out["sign"] = cr.sign == RaySign::minus ? "minus" : "plus";
  }
  return out;
}

Json partition_json(const GradedPartition& p) {
  Json layers = Json::array();
  for (const auto& layer : p.layers) {
    Json pts = Json::array();
    for (const auto& point : layer) pts.push_back(point_json(point));
    layers.push_back(std::move(pts));
  }
  Json out;
  out["layers"] = std::move(layers);
  return out;
}

Json functional_json(const ExposingFunctional& l, const GroundSet& A) {
  Json values = Json::array();
  for (const auto& p : A.points) {
    Json entry;
    entry["point"] = point_json(p);
    entry["value"] = scalar_to_json(l.at(p));
    values.push_back(std::move(entry));
  }
  Json out;
  out["values"] = std::move(values);
  return out;
}

Json verdict_json(const Verdict& v, std::size_t ray_index) {
  Json out;
  out["ray"] = ray_index;
  out["pass"] = v.pass;
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    Json rec;
    rec["subject"] = c.subject;
    rec["kind"] = c.kind;
    rec["outcome"] = c.outcome;
    rec["ok"] = c.ok;
    checks.push_back(std::move(rec));
  }
  out["checks"] = std::move(checks);
  Json failures = Json::array();
  for (const auto& c : v.failures()) {
    Json rec;
    rec["subject"] = c.subject;
    rec["kind"] = c.kind;
    rec["outcome"] = c.outcome;
    failures.push_back(std::move(rec));
  }
  out["failures"] = std::move(failures);
  return out;
}

}  // namespace

Json scalar_to_json(const ExactScalar& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return Json(to_string(*r));
  const auto& p = std::get<SignedPower>(v);
  Json out;
  out["base"] = to_string(p.base);
  out["exp"] = to_string(p.exponent);
  if (p.sign < 0) out["sign"] = -1;
  return out;
}

Json circuits_report(const GroundSet& A, Exec mode) {
  const auto circuits = enumerate_circuits(A, mode);
  std::vector<char> reduced(circuits.size(), 0);
  parallel_for(mode, circuits.size(),
               [&](std::size_t i) { reduced[i] = is_reduced(circuits[i], A) ? 1 : 0; });

  Json out;
  out["ground_set"] = ground_set_to_json(A);
  Json list = Json::array();
  std::size_t reduced_count = 0;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    list.push_back(circuit_json(circuits[i], i, reduced[i] != 0));
    if (reduced[i]) ++reduced_count;
  }
  out["circuits"] = std::move(list);
  out["circuit_count"] = circuits.size();
  out["reduced_count"] = reduced_count;
  return out;
}

AtlasResult run_atlas(const GroundSet& A, const AtlasOptions& options) {
  Json timing;
  auto t0 = Clock::now();
  const auto circuits = enumerate_circuits(A, options.mode);
  const Integer lambda = global_lambda(circuits);
  timing["circuits_ms"] = ms_since(t0);

  t0 = Clock::now();
  const auto catalog = catalog_extreme_rays(A, circuits, options.mode);
  timing["rays_ms"] = ms_since(t0);

  t0 = Clock::now();
  std::vector<ExposednessDecision> decisions(catalog.size());
  parallel_for(options.mode, catalog.size(), [&](std::size_t i) {
    decisions[i] = decide_exposed(catalog[i], A, circuits, catalog);
  });
  timing["decisions_ms"] = ms_since(t0);

  t0 = Clock::now();
  std::vector<std::optional<Certificate>> certificates(catalog.size());
  parallel_for(options.mode, catalog.size(), [&](std::size_t i) {
    if (decisions[i].exposed)
      certificates[i] = make_certificate(catalog[i], A, circuits, lambda, Exec::serial);
  });
  timing["certificates_ms"] = ms_since(t0);

  t0 = Clock::now();
  std::vector<std::optional<Verdict>> verdicts(catalog.size());
  std::vector<std::optional<SpotcheckReport>> spotchecks(catalog.size());
  parallel_for(options.mode, catalog.size(), [&](std::size_t i) {
    if (!certificates[i]) return;
    verdicts[i] = verify_certificate(*certificates[i], A, catalog);
    spotchecks[i] = numeric_spotcheck(*certificates[i], A, catalog, options.samples,
                                      options.seed + 1000003 * i);
  });
  timing["verify_ms"] = ms_since(t0);

  std::vector<std::optional<std::vector<ProbePoint>>> probes(catalog.size());
  if (options.probe) {
    t0 = Clock::now();
    const auto grid = default_probe_grid(options.probe_depth);
    parallel_for(options.mode, catalog.size(), [&](std::size_t i) {
      if (decisions[i].exposed) return;
      probes[i] = unexposedness_probe(decisions[i].ray.monomial().point,
                                      *decisions[i].witness, A, grid, circuits, catalog);
    });
    timing["probe_ms"] = ms_since(t0);
  }

  std::vector<char> reduced_flags(circuits.size(), 0);
  parallel_for(options.mode, circuits.size(),
               [&](std::size_t i) { reduced_flags[i] = is_reduced(circuits[i], A) ? 1 : 0; });

  const Rational probe_threshold(1, 1000000);
  bool ok = true;

  Json report;
  report["command"] = "atlas";
  report["ground_set"] = ground_set_to_json(A);
  Json circuit_list = Json::array();
  for (std::size_t i = 0; i < circuits.size(); ++i)
    circuit_list.push_back(circuit_json(circuits[i], i, reduced_flags[i] != 0));
  report["circuits"] = std::move(circuit_list);
  report["lambda"] = to_string(lambda);

  Json ray_list = Json::array();
  for (std::size_t i = 0; i < catalog.size(); ++i)
    ray_list.push_back(ray_json(catalog[i], i, circuits));
  report["rays"] = std::move(ray_list);

  Json decision_list = Json::array();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    Json d;
    d["ray"] = i;
    d["exposed"] = decisions[i].exposed;
    if (decisions[i].witness) {
      const auto it = std::find(circuits.begin(), circuits.end(), *decisions[i].witness);
      d["witness"] = static_cast<std::size_t>(it - circuits.begin());
    }
    decision_list.push_back(std::move(d));
  }
  report["decisions"] = std::move(decision_list);

  Json cert_list = Json::array();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (!certificates[i]) continue;
    Json c;
    c["ray"] = i;
    c["lambda"] = to_string(certificates[i]->lambda_used);
    c["partition"] = partition_json(certificates[i]->partition);
    c["functional"] = functional_json(certificates[i]->functional, A);
    cert_list.push_back(std::move(c));
  }
  report["certificates"] = std::move(cert_list);

  Json verdict_list = Json::array();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (!verdicts[i]) continue;
    Json v = verdict_json(*verdicts[i], i);
    if (!verdicts[i]->pass) ok = false;
    if (spotchecks[i]) {
      Json families = Json::array();
      for (const auto& f : spotchecks[i]->families) {
        Json rec;
        const auto it = std::find(circuits.begin(), circuits.end(), f.family.circuit);
        rec["circuit"] = static_cast<std::size_t>(it - circuits.begin());
        rec["sign"] = f.family.sign == RaySign::minus ? "minus" : "plus";
        rec["min_relative_margin"] = f.min_relative_margin;
        rec["flagged"] = f.flagged;
        families.push_back(std::move(rec));
      }
      v["spotcheck"] = std::move(families);
      if (spotchecks[i]->any_flagged()) ok = false;
    }
    verdict_list.push_back(std::move(v));
  }
  report["verdicts"] = std::move(verdict_list);

  if (options.probe) {
    Json probe_list = Json::array();
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      if (!probes[i]) continue;
      Json p;
      p["ray"] = i;
      Json curve = Json::array();
      Rational previous;
      bool monotone = true, first = true;
      for (const auto& point : *probes[i]) {
        Json entry;
        entry["t"] = to_string(point.t);
        entry["margin"] = to_string(point.margin);
        entry["margin_approx"] = to_double(point.margin);
        curve.push_back(std::move(entry));
        if (!first && point.margin > previous) monotone = false;
        previous = point.margin;
        first = false;
      }
      const bool below = !probes[i]->empty() && probes[i]->back().margin <= probe_threshold;
      p["curve"] = std::move(curve);
      p["monotone"] = monotone;
      p["final_margin_below_threshold"] = below;
      if (!monotone || !below) ok = false;
      probe_list.push_back(std::move(p));
    }
    report["probes"] = std::move(probe_list);
  }

  report["timing"] = std::move(timing);
  return {std::move(report), ok};
}

std::string diagram_svg(const GroundSet& A) {
  if (A.n != 2) throw std::invalid_argument("diagram requires n=2");

  const auto circuits = enumerate_circuits(A);
  int max_x = 0, max_y = 0;
  for (const auto& p : A.points) {
    max_x = std::max(max_x, p[0]);
    max_y = std::max(max_y, p[1]);
  }
  const int scale = 48, margin = 40;
  const int width = margin * 2 + scale * max_x;
  const int height = margin * 2 + scale * max_y;
  auto px = [&](int x) { return margin + scale * x; };
  auto py = [&](int y) { return margin + scale * (max_y - y); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  for (int x = 0; x <= max_x; ++x)
    svg << "  <line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x)
        << "\" y2=\"" << py(max_y) << "\" stroke=\"#eeeeee\"/>\n";
  for (int y = 0; y <= max_y; ++y)
    svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(max_x)
        << "\" y2=\"" << py(y) << "\" stroke=\"#eeeeee\"/>\n";

  for (const auto& c : circuits) {
    const bool reduced = is_reduced(c, A);
    svg << "  <polygon points=\"";
    for (std::size_t i = 0; i < c.support.size(); ++i) {
      if (i) svg << ' ';
      svg << px(c.support[i][0]) << ',' << py(c.support[i][1]);
    }
    svg << "\" fill=\"none\" stroke=\"" << (reduced ? "#d03030" : "#999999")
        << "\" stroke-width=\"" << (reduced ? "2.5" : "1.2") << "\""
        << (reduced ? "" : " stroke-dasharray=\"5,4\"") << "/>\n";
  }

  for (const auto& p : A.points) {
    const bool even = is_even(p);
    svg << "  <circle cx=\"" << px(p[0]) << "\" cy=\"" << py(p[1]) << "\" r=\"5\" fill=\""
        << (even ? "#202020" : "white") << "\" stroke=\"#202020\" stroke-width=\"1.5\"/>\n";
    svg << "  <text x=\"" << px(p[0]) + 8 << "\" y=\"" << py(p[1]) - 8
        << "\" font-size=\"11\" font-family=\"sans-serif\" fill=\"#555555\">" << p[0] << ','
        << p[1] << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace soncray
