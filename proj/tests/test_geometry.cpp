#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "soncray/geometry.hpp"

using namespace soncray;

TEST_CASE("affinely_independent agrees with hand determinants") {
  // difference vectors (4,2),(2,4): det = 4*4 - 2*2 = 12 != 0
  CHECK(4 * 4 - 2 * 2 == 12);
  CHECK(affinely_independent(std::vector<LatticePoint>{{0, 0}, {4, 2}, {2, 4}}));
  CHECK_FALSE(affinely_independent(std::vector<LatticePoint>{{0}, {2}, {4}}));
  CHECK(affinely_independent(std::vector<LatticePoint>{{0, 0}}));
  CHECK_THROWS_AS(affinely_independent(std::vector<LatticePoint>{{0, 0}, {1}}),
                  std::invalid_argument);
}

TEST_CASE("barycentric_coordinates solves the affine system exactly") {
  const std::vector<LatticePoint> segment{{0}, {4}};
  const auto mid = barycentric_coordinates(segment, LatticePoint{2});
  REQUIRE(mid.has_value());
  CHECK(mid->at(LatticePoint{0}) == Rational(1, 2));
  CHECK(mid->at(LatticePoint{4}) == Rational(1, 2));

  const std::vector<LatticePoint> triangle{{0, 0}, {4, 2}, {2, 4}};
  const auto center = barycentric_coordinates(triangle, LatticePoint{2, 2});
  REQUIRE(center.has_value());
  for (const auto& [point, lambda] : center->entries) CHECK(lambda == Rational(1, 3));

  // boundary point: coordinates would be (0, 1), not strictly positive
  CHECK_FALSE(barycentric_coordinates(segment, LatticePoint{4}).has_value());
  // outside the affine hull
  CHECK_FALSE(barycentric_coordinates(std::vector<LatticePoint>{{0, 0}, {2, 0}},
                                      LatticePoint{1, 1})
                  .has_value());
  CHECK_THROWS_AS(barycentric_coordinates(std::vector<LatticePoint>{{0}, {2}, {4}},
                                          LatticePoint{1}),
                  std::invalid_argument);
}

TEST_CASE("in_convex_hull decides membership exactly") {
  CHECK(in_convex_hull(std::vector<LatticePoint>{{0}, {6}}, LatticePoint{4}));
  // barycentric solve by hand gives a negative coordinate for (4,4)
  CHECK_FALSE(in_convex_hull(std::vector<LatticePoint>{{0, 0}, {4, 2}, {2, 4}},
                             LatticePoint{4, 4}));
  CHECK(in_convex_hull(std::vector<LatticePoint>{{3, 3}}, LatticePoint{3, 3}));
  CHECK_FALSE(in_convex_hull(std::vector<LatticePoint>{{3, 3}}, LatticePoint{3, 4}));
}

TEST_CASE("vertices strips interior points") {
  const std::vector<LatticePoint> interval{{0}, {2}, {4}, {6}};
  CHECK(vertices(interval) == std::vector<LatticePoint>{{0}, {6}});

  const std::vector<LatticePoint> motzkin{{0, 0}, {2, 2}, {2, 4}, {4, 2}};
  CHECK(vertices(motzkin) == std::vector<LatticePoint>{{0, 0}, {2, 4}, {4, 2}});

  const std::vector<LatticePoint> single{{5, 1}};
  CHECK(vertices(single) == single);
}

TEST_CASE("vertex and hull predicates are mutually consistent on fuzzed sets") {
  auto corpus = testing::fuzz_corpus(40, 77001);
  for (const auto& A : corpus) {
    const auto verts = vertices(A.points);
    CHECK(vertices(A.points, Exec::serial) == verts);
    REQUIRE(!verts.empty());
    for (const auto& p : A.points) {
      const bool is_vertex = std::find(verts.begin(), verts.end(), p) != verts.end();
      // every member is in the hull of the vertex set
      CHECK(in_convex_hull(verts, p));
      if (!is_vertex) {
        std::vector<LatticePoint> others;
        for (const auto& q : A.points)
          if (q != p) others.push_back(q);
        CHECK(in_convex_hull(others, p));
      }
    }
  }
}

TEST_CASE("exact membership agrees with an independent float LP") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> n_dist(1, 3);
  std::uniform_int_distribution<int> size_dist(1, 10);
  std::uniform_int_distribution<int> coord(0, 10);

  int compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = n_dist(rng);
    const int m = size_dist(rng);
    std::vector<LatticePoint> E;
    for (int i = 0; i < m; ++i) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (auto& v : c) v = coord(rng);
      E.emplace_back(std::move(c));
    }
    std::vector<int> pc(static_cast<std::size_t>(n));
    for (auto& v : pc) v = coord(rng);
    const LatticePoint p(std::move(pc));

    const bool exact = in_convex_hull(E, p);
    const auto [feasible, margin] = testing::float_in_hull(E, p);
    if (!feasible && margin > 1e-6) {
      CHECK_FALSE(exact);
      ++compared;
    } else if (feasible && margin < 1e-12) {
      ++compared;
      CHECK(exact == feasible);
    }
  }
  CHECK(compared > 500);  // the float reference must actually bite
}
