#include "cutcell/moments.hpp"

#include <cmath>
#include <cstring>

#include "doctest.h"

using namespace cutcell;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("half-plane aligned with a face produces pure cells") {
  auto g = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {2, 2, 1});
  HalfSpace hs({1, 0, 0}, {0.5, 0, 0});
  auto ms = compute_moments(g, hs);
  for (int j = 0; j < 2; ++j) {
    CHECK(ms.kind[g.cell_index(0, j, 0)] == CellKind::pure_light);
    CHECK(ms.kind[g.cell_index(1, j, 0)] == CellKind::pure_dark);
    CHECK(ms.volume[0][g.cell_index(0, j, 0)] == doctest::Approx(0.25));
    CHECK(ms.volume[0][g.cell_index(1, j, 0)] == 0.0);
  }
  // psi = 0 on the shared face counts as dark, so the light aperture vanishes.
  const int f = g.face_index(0, 1, 0, 0);
  CHECK(ms.aperture[0][0][f] == 0.0);
  CHECK(ms.aperture[1][0][f] == doctest::Approx(0.5));
}

TEST_CASE("half-plane through cell interiors") {
  auto g = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {2, 2, 1});
  HalfSpace hs({1, 0, 0}, {0.3, 0, 0});
  auto ms = compute_moments(g, hs);
  const int c = g.cell_index(0, 0, 0);
  CHECK(ms.kind[c] == CellKind::cut);
  CHECK(ms.volume[0][c] == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(ms.centroid[0][c].x == doctest::Approx(0.15).epsilon(1e-10));
  CHECK(ms.centroid[1][c].x == doctest::Approx(0.4).epsilon(1e-10));
  CHECK(ms.gamma_measure[c] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ms.gamma_centroid[c].x == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(ms.gamma_centroid[c].y == doctest::Approx(0.25).epsilon(1e-10));
  // Cross-section through the light centroid is the full cell height.
  CHECK(ms.line[0][0][c] == doctest::Approx(0.5));
  // Along y both phases span the full width at their centroids.
  CHECK(ms.line[0][1][c] == doctest::Approx(0.3).epsilon(1e-10));
}

TEST_CASE("partition identities hold to the last bit") {
  auto g = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {8, 8, 1});
  Ball ball({0.5, 0.5, 0}, 0.3, 2);
  auto ms = compute_moments(g, ball);
  for (int c = 0; c < g.cell_count(); ++c) {
    CHECK(ms.volume[0][c] + ms.volume[1][c] == g.cell_volume(c));
    const double v0 = ms.volume[0][c], v1 = ms.volume[1][c];
    if (v0 > 0 && v1 > 0) {
      const Vec3 lhs = v0 * ms.centroid[0][c] + v1 * ms.centroid[1][c];
      const Vec3 rhs = g.cell_volume(c) * g.cell_center(c);
      for (int a = 0; a < 2; ++a)
        CHECK(lhs[a] == doctest::Approx(rhs[a]).epsilon(1e-13));
    }
  }
  for (int a = 0; a < 2; ++a)
    for (int f = 0; f < g.face_count(a); ++f)
      CHECK(ms.aperture[0][a][f] + ms.aperture[1][a][f] ==
            doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("circle volumes, interface length, and centroid bounds") {
  const double R = 0.3;
  auto g = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {16, 16, 1});
  Ball ball({0.5, 0.5, 0}, R, 2);
  auto ms = compute_moments(g, ball);
  double vol = 0, per = 0;
  for (int c = 0; c < g.cell_count(); ++c) {
    vol += ms.volume[0][c];
    per += ms.gamma_measure[c];
    const auto [i, j, k] = g.cell_coords(c);
    for (int p = 0; p < 2; ++p) {
      CHECK(ms.centroid[p][c].x >= g.lo(0, i));
      CHECK(ms.centroid[p][c].x <= g.hi(0, i));
      CHECK(ms.centroid[p][c].y >= g.lo(1, j));
      CHECK(ms.centroid[p][c].y <= g.hi(1, j));
    }
  }
  CHECK(vol == doctest::Approx(kPi * R * R).epsilon(1e-5));
  CHECK(per == doctest::Approx(2 * kPi * R).epsilon(1e-4));
}

TEST_CASE("sphere volumes and interface area") {
  const double R = 0.3;
  auto g = make_uniform_grid(3, {0, 0, 0}, {1, 1, 1}, {12, 12, 12});
  Ball ball({0.5, 0.5, 0.5}, R);
  auto ms = compute_moments(g, ball);
  double vol = 0, area = 0;
  for (int c = 0; c < g.cell_count(); ++c) {
    vol += ms.volume[0][c];
    area += ms.gamma_measure[c];
  }
  CHECK(vol == doctest::Approx(4.0 / 3.0 * kPi * R * R * R).epsilon(5e-4));
  CHECK(area == doctest::Approx(4 * kPi * R * R).epsilon(2e-3));
}

TEST_CASE("hidden staggered volume carries the interface flux face") {
  // Interface inside cell 2; cell 3 is pure dark. The face between them has
  // zero light aperture but a positive staggered volume spanning the light
  // centroid of cell 2 to the fallback centroid of cell 3.
  auto g = make_uniform_grid(1, {0, 0, 0}, {4, 0, 0}, {4, 1, 1});
  HalfSpace hs({1, 0, 0}, {2.5, 0, 0});
  auto ms = compute_moments(g, hs);
  CHECK(ms.kind[1] == CellKind::pure_light);
  CHECK(ms.kind[2] == CellKind::cut);
  CHECK(ms.kind[3] == CellKind::pure_dark);
  CHECK(ms.volume[0][2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ms.centroid[0][2].x == doctest::Approx(2.25).epsilon(1e-10));
  const int f23 = g.face_index(0, 3, 0, 0);
  CHECK(ms.aperture[0][0][f23] == 0.0);
  CHECK(ms.stagger[0][0][f23] == doctest::Approx(0.25).epsilon(1e-9));
  // Dark-phase spacing from its bulk centroid back to the interface.
  const int f12 = g.face_index(0, 2, 0, 0);
  CHECK(ms.stagger[0][0][f12] == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(ms.stagger[1][0][f12] == doctest::Approx(0.25).epsilon(1e-9));
  // Light line measure at the light centroid of the cut cell.
  CHECK(ms.line[0][0][2] == doctest::Approx(1.0));
  CHECK(ms.line[0][0][3] == 0.0);
  // Between two pure light cells the staggered volume is the full box.
  const int f01 = g.face_index(0, 1, 0, 0);
  CHECK(ms.stagger[0][0][f01] == doctest::Approx(1.0));
  CHECK(ms.stagger[1][0][f01] == 0.0);
}

TEST_CASE("translation by whole cells is exact") {
  auto ga = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {8, 8, 1});
  auto gb = make_uniform_grid(2, {0.25, 0, 0}, {1.25, 1, 0}, {8, 8, 1});
  Ball ba({0.4375, 0.5, 0}, 0.3, 2);
  Ball bb({0.6875, 0.5, 0}, 0.3, 2);  // shifted by 0.25 = 2h, all dyadic
  auto ma = compute_moments(ga, ba);
  auto mb = compute_moments(gb, bb);
  // Shift equivariance holds up to rounding of the shifted coordinates.
  auto near = [](double x, double y) {
    return std::abs(x - y) <= 1e-13 * (1.0 + std::abs(x));
  };
  for (int c = 0; c < ga.cell_count(); ++c) {
    CHECK(near(ma.volume[0][c], mb.volume[0][c]));
    CHECK(near(ma.gamma_measure[c], mb.gamma_measure[c]));
    CHECK(near(ma.centroid[0][c].x + 0.25, mb.centroid[0][c].x));
    CHECK(near(ma.centroid[0][c].y, mb.centroid[0][c].y));
  }
  for (int a = 0; a < 2; ++a)
    for (int f = 0; f < ga.face_count(a); ++f) {
      CHECK(near(ma.aperture[0][a][f], mb.aperture[0][a][f]));
      CHECK(near(ma.stagger[0][a][f], mb.stagger[0][a][f]));
    }
}

TEST_CASE("repeat evaluation is deterministic") {
  auto g = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {8, 8, 1});
  TrigStar star({0.5, 0.5, 0}, 0.3, 0.1, 5);
  auto m1 = compute_moments(g, star);
  auto m2 = compute_moments(g, star);
  CHECK(std::memcmp(m1.volume[0].data(), m2.volume[0].data(),
                    m1.volume[0].size() * sizeof(double)) == 0);
  CHECK(std::memcmp(m1.gamma_measure.data(), m2.gamma_measure.data(),
                    m1.gamma_measure.size() * sizeof(double)) == 0);
}

TEST_CASE("classify agrees with compute_moments") {
  auto g = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {12, 12, 1});
  TrigStar star({0.5, 0.5, 0}, 0.3, 0.08, 6);
  auto ms = compute_moments(g, star);
  auto kinds = classify(g, star);
  for (int c = 0; c < g.cell_count(); ++c) CHECK(kinds[c] == ms.kind[c]);
}

TEST_CASE("sampled level set reproduces a ball") {
  auto fine = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {64, 64, 1});
  std::vector<double> vals;
  for (int j = 0; j <= 64; ++j)
    for (int i = 0; i <= 64; ++i) {
      const double x = i / 64.0, y = j / 64.0;
      vals.push_back(std::hypot(x - 0.5, y - 0.5) - 0.3);
    }
  // Node ordering: x fastest, matching SampledLevelSet's stride layout.
  std::vector<double> vals3;
  vals3.reserve((64 + 1) * (64 + 1) * 2);
  for (int k = 0; k < 2; ++k) vals3.insert(vals3.end(), vals.begin(), vals.end());
  SampledLevelSet ls(fine, vals3);
  auto g = make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {16, 16, 1});
  auto ms = compute_moments(g, ls);
  double vol = 0;
  for (int c = 0; c < g.cell_count(); ++c) vol += ms.volume[0][c];
  CHECK(vol == doctest::Approx(kPi * 0.09).epsilon(5e-3));
}
