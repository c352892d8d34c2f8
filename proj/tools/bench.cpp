// Compares the serial reference kernels against the OpenMP-parallel ones on
// grid-shaped ground sets and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "soncray/circuits.hpp"
#include "soncray/geometry.hpp"
#include "soncray/rays.hpp"
#include "soncray/report.hpp"

using namespace soncray;

namespace {

double seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

GroundSet grid_ground_set(int even_side, int odd_count) {
  std::vector<LatticePoint> pts;
  for (int i = 0; i < even_side; ++i)
    for (int j = 0; j < even_side; ++j) pts.push_back(LatticePoint{2 * i, 2 * j});
  for (int k = 0; k < odd_count; ++k) pts.push_back(LatticePoint{2 * k + 1, 1});
  return GroundSet::from_points(2, std::move(pts));
}

template <typename F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return seconds(start);
}

void report(const char* name, double serial_s, double parallel_s) {
  std::printf("%-24s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n", name, serial_s,
              parallel_s, serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
  const int side = argc > 1 ? std::atoi(argv[1]) : 6;
  const GroundSet A = grid_ground_set(side, side);
  std::printf("ground set: n=2, |A|=%zu (%d workers)\n", A.points.size(), worker_count());

  std::vector<Circuit> serial_circuits, parallel_circuits;
  const double t_enum_serial = timed([&] { serial_circuits = enumerate_circuits(A, Exec::serial); });
  const double t_enum_parallel =
      timed([&] { parallel_circuits = enumerate_circuits(A, Exec::parallel); });
  if (serial_circuits != parallel_circuits) {
    std::fprintf(stderr, "FAIL: circuit enumeration mismatch between modes\n");
    return 1;
  }
  std::printf("circuits found: %zu\n", serial_circuits.size());
  report("enumerate_circuits", t_enum_serial, t_enum_parallel);

  std::vector<LatticePoint> vs, vp;
  const double t_vert_serial = timed([&] { vs = vertices(A.points, Exec::serial); });
  const double t_vert_parallel = timed([&] { vp = vertices(A.points, Exec::parallel); });
  if (vs != vp) {
    std::fprintf(stderr, "FAIL: vertex enumeration mismatch between modes\n");
    return 1;
  }
  report("vertices", t_vert_serial, t_vert_parallel);

  AtlasOptions serial_opt, parallel_opt;
  serial_opt.mode = Exec::serial;
  parallel_opt.mode = Exec::parallel;
  serial_opt.samples = parallel_opt.samples = 20;
  nlohmann::ordered_json rs, rp;
  const double t_atlas_serial = timed([&] {
    auto result = run_atlas(A, serial_opt);
    result.report.erase("timing");
    rs = std::move(result.report);
  });
  const double t_atlas_parallel = timed([&] {
    auto result = run_atlas(A, parallel_opt);
    result.report.erase("timing");
    rp = std::move(result.report);
  });
  if (rs != rp) {
    std::fprintf(stderr, "FAIL: atlas report mismatch between modes\n");
    return 1;
  }
  report("atlas pipeline", t_atlas_serial, t_atlas_parallel);
  return 0;
}
