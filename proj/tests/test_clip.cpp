#include "cutcell/implicit_clip.hpp"

#include <cmath>

#include "doctest.h"
#include "cutcell/geometry.hpp"

using namespace cutcell;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("segment measures and crossings") {
  HalfSpace hs({1, 0, 0}, {0.3, 0, 0});
  auto sm = clip::segment_moments(hs, {0, 0.5, 0.5}, 0, 0.0, 1.0);
  CHECK(sm.measure == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(sm.moment == doctest::Approx(0.5 * 0.3 * 0.3).epsilon(1e-9));
  REQUIRE(sm.crossings.size() == 1);
  CHECK(sm.crossings[0] == doctest::Approx(0.3).epsilon(1e-10));

  Ball ball({0.5, 0, 0}, 0.2);
  auto bm = clip::segment_moments(ball, {0, 0, 0}, 0, 0.0, 1.0);
  CHECK(bm.measure == doctest::Approx(0.4).epsilon(1e-10));
  REQUIRE(bm.crossings.size() == 2);
  CHECK(bm.crossings[0] == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(bm.crossings[1] == doctest::Approx(0.7).epsilon(1e-9));

  // Fully dark and fully light segments.
  auto far = clip::segment_moments(ball, {0, 0.9, 0}, 0, 0.0, 1.0);
  CHECK(far.measure == 0.0);
  CHECK(far.crossings.empty());
  HalfSpace all({1, 0, 0}, {5, 0, 0});
  CHECK(clip::segment_moments(all, {0, 0, 0}, 0, 0.0, 1.0).measure ==
        doctest::Approx(1.0));
}

TEST_CASE("rectangle against half-planes is exact") {
  HalfSpace hs({1, 0, 0}, {0.3, 0, 0});
  auto rm = clip::rect_moments(hs, 0, 1, {0, 0, 0.5}, {1, 1, 0.5});
  CHECK(rm.area == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(rm.moment.x / rm.area == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(rm.moment.y / rm.area == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rm.moment.z / rm.area == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rm.line == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rm.line_moment.x / rm.line == doctest::Approx(0.3).epsilon(1e-12));

  HalfSpace diag({1, 1, 0}, {0.5, 0.5, 0});
  auto dm = clip::rect_moments(diag, 0, 1, {0, 0, 0}, {1, 1, 0});
  CHECK(dm.area == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dm.moment.x / dm.area == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(dm.line == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("quarter disk moments") {
  Ball ball({0, 0, 0}, 1.0);
  auto rm = clip::rect_moments(ball, 0, 1, {0, 0, 0}, {1, 1, 0});
  CHECK(rm.area == doctest::Approx(kPi / 4).epsilon(2e-6));
  // Interface length converges first order in the leaf size (secant vs arc),
  // so on this unit-sized box the depth cap leaves ~5e-4 relative error.
  CHECK(rm.line == doctest::Approx(kPi / 2).epsilon(1e-3));
  CHECK(rm.moment.x / rm.area == doctest::Approx(4.0 / (3 * kPi)).epsilon(1e-5));
  CHECK(rm.moment.y / rm.area == doctest::Approx(4.0 / (3 * kPi)).epsilon(1e-5));
}

TEST_CASE("box against half-spaces") {
  HalfSpace hs({0, 0, 1}, {0, 0, 0.5});
  auto bm = clip::box_moments(hs, {0, 0, 0}, {1, 1, 1});
  CHECK(bm.volume == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(bm.moment.z / bm.volume == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(bm.area == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bm.area_moment.x / bm.area == doctest::Approx(0.5).epsilon(1e-12));

  HalfSpace diag({1, 1, 1}, {0.5, 0.5, 0.5});
  auto dm = clip::box_moments(diag, {0, 0, 0}, {1, 1, 1});
  CHECK(dm.volume == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dm.area == doctest::Approx(3 * std::sqrt(3.0) / 4).epsilon(1e-10));

  // Corner tetrahedron {x+y+z < 0.5}.
  HalfSpace corner({1, 1, 1}, {0.5, 0, 0});
  auto tm = clip::box_moments(corner, {0, 0, 0}, {1, 1, 1});
  CHECK(tm.volume == doctest::Approx(1.0 / 48).epsilon(1e-10));
  CHECK(tm.moment.x / tm.volume == doctest::Approx(0.125).epsilon(1e-9));
}

TEST_CASE("sphere octant") {
  Ball ball({0, 0, 0}, 1.0);
  auto bm = clip::box_moments(ball, {0, 0, 0}, {1, 1, 1});
  CHECK(bm.volume == doctest::Approx(kPi / 6).epsilon(5e-4));
  CHECK(bm.area == doctest::Approx(kPi / 2).epsilon(2e-3));
  // Octant shell centroid: each coordinate of the surface patch averages 1/2.
  CHECK(bm.area_moment.x / bm.area == doctest::Approx(0.5).epsilon(5e-3));
}
