#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "soncray/report.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw soncray::ParseError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"soncray: circuits, extreme rays, and exposing functionals of SONC cones"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output;
  soncray::AtlasOptions options;
  bool serial = false;

  auto* circuits = app.add_subcommand("circuits", "enumerate circuits with exact barycentric data");
  circuits->add_option("input", input, "ground-set JSON (path or - for stdin)");

  auto* atlas = app.add_subcommand("atlas", "full exposedness atlas with verified certificates");
  atlas->add_option("input", input, "ground-set JSON (path or - for stdin)");
  atlas->add_flag("--probe", options.probe, "run LP corroboration probes for unexposed rays");
  atlas->add_option("--samples", options.samples, "numeric spot-check samples per family")
      ->check(CLI::NonNegativeNumber);
  atlas->add_option("--seed", options.seed, "seed for the sampling generator");
  atlas->add_flag("--serial", serial, "run the serial reference kernels");

  auto* diagram = app.add_subcommand("diagram", "SVG lattice diagram of a planar ground set");
  diagram->add_option("input", input, "ground-set JSON (path or - for stdin)");
  diagram->add_option("-o,--output", output, "write the SVG here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    const soncray::GroundSet A = soncray::parse_ground_set(read_input(input));
    if (serial) options.mode = soncray::Exec::serial;

    if (circuits->parsed()) {
      std::cout << soncray::circuits_report(A, options.mode).dump(2) << '\n';
      return 0;
    }
    if (atlas->parsed()) {
      const soncray::AtlasResult result = soncray::run_atlas(A, options);
      std::cout << result.report.dump(2) << '\n';
      if (!result.verification_ok) {
        std::cerr << "soncray: verification failures present in the report\n";
        return 2;
      }
      return 0;
    }
    if (diagram->parsed()) {
      const std::string svg = soncray::diagram_svg(A);
      if (output.empty()) {
        std::cout << svg;
      } else {
        std::ofstream file(output);
        if (!file) throw soncray::ParseError("cannot open output file: " + output);
        file << svg;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "soncray: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
