#include "cutcell/grid.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace cutcell;

TEST_CASE("uniform grid basics") {
  auto g = make_uniform_grid(2, {0, 0, 0}, {2, 1, 0}, {4, 2, 1});
  CHECK(g.dim == 2);
  CHECK(g.cell_count() == 8);
  CHECK(g.n[2] == 1);
  CHECK(g.width(0, 0) == doctest::Approx(0.5));
  CHECK(g.width(2, 0) == 1.0);  // collapsed axis spans [0,1]
  CHECK(g.cell_volume(0) == doctest::Approx(0.25));
  CHECK(g.face_count(0) == 10);
  CHECK(g.face_count(1) == 12);

  const int c = g.cell_index(3, 1, 0);
  auto co = g.cell_coords(c);
  CHECK(co[0] == 3);
  CHECK(co[1] == 1);
  CHECK(g.cell_center(c).x == doctest::Approx(1.75));
  CHECK(g.cell_center(c).y == doctest::Approx(0.75));
}

TEST_CASE("face indexing covers low and high faces") {
  auto g = make_uniform_grid(3, {0, 0, 0}, {1, 1, 1}, {2, 2, 2});
  CHECK(g.face_count(0) == 3 * 2 * 2);
  // Low face of cell (i,j,k) along x is face (i,j,k); high face is (i+1,j,k).
  CHECK(g.face_index(0, 2, 1, 1) == g.face_count(0) - 1);
  CHECK(g.face_measure(0, 0, 0, 0) == doctest::Approx(0.25));
}

TEST_CASE("invalid grids are rejected") {
  CHECK_THROWS_AS(make_grid(2, {std::vector<double>{0.0, 0.0, 1.0}, {0.0, 1.0}, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_uniform_grid(2, {0, 0, 0}, {1, 1, 0}, {4, 0, 1}),
                  std::invalid_argument);
}

TEST_CASE("nonuniform abscissas") {
  auto g = make_grid(1, {std::vector<double>{0.0, 0.1, 0.4, 1.0}, {}, {}});
  CHECK(g.cell_count() == 3);
  CHECK(g.width(0, 1) == doctest::Approx(0.3));
  CHECK(g.min_width() == doctest::Approx(0.1));
  CHECK(g.cell_volume(2) == doctest::Approx(0.6));
}
