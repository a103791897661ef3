#include <cmath>
#include <random>

#include "cutcell/three_cell_reference.hpp"
#include "doctest.h"

using namespace cutcell;

TEST_CASE("hand system and general assembler agree on random configurations") {
  std::mt19937 rng(4257);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    ThreeCellConfig cfg;
    cfg.dx = 0.3 + 1.7 * u(rng);
    cfg.lminus = cfg.dx * (0.05 + 0.9 * u(rng));
    for (int p = 0; p < 2; ++p) {
      cfg.k[p] = std::pow(10.0, -1.0 + 2.0 * u(rng));
      cfg.c[p] = 0.2 + 4.8 * u(rng);
    }
    cfg.dt = 0.01 + 0.49 * u(rng);
    cfg.a = -2.0 + 4.0 * u(rng);
    cfg.b = -2.0 + 4.0 * u(rng);
    for (double& v : cfg.phi_n) v = -1.0 + 2.0 * u(rng);

    Vec6 hand = three_cell_solve(cfg);
    Vec6 gen = three_cell_general_solve(cfg);
    const double scale = std::max(1.0, hand.cwiseAbs().maxCoeff());
    CHECK((hand - gen).cwiseAbs().maxCoeff() <= 1e-12 * scale);

    // The solved state satisfies both interface conditions.
    CHECK(std::abs(hand[3] - hand[4]) <= 1e-12 * scale);
    const double lplus = cfg.dx - cfg.lminus;
    const double qm = cfg.k[0] * (hand[3] - hand[1]) / cfg.lminus;
    const double qp = cfg.k[1] * (hand[2] - hand[4]) / lplus;
    CHECK(std::abs(qm - qp) <= 1e-10 * std::max(1.0, std::abs(qm)));
  }
}

TEST_CASE("degenerate interface positions are rejected") {
  ThreeCellConfig cfg;
  cfg.lminus = 0.0;
  CHECK_THROWS(three_cell_matrix(cfg));
  cfg.lminus = cfg.dx;
  CHECK_THROWS(three_cell_matrix(cfg));
}
