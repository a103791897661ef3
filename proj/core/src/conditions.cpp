#include "cutcell/conditions.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace cutcell {

void validate(const ProblemSpec& prob, const MomentSet& ms) {
  if (!(prob.theta >= 0.0 && prob.theta <= 1.0))
    throw std::invalid_argument("theta must lie in [0,1]");
  if (!prob.steady) {
    if (!(prob.dt > 0.0)) throw std::invalid_argument("unsteady run requires dt > 0");
    if (!(prob.t_final > 0.0)) throw std::invalid_argument("unsteady run requires t_final > 0");
  }
  if (!prob.phase[0].active && !prob.phase[1].active)
    throw std::invalid_argument("no active phase");
  for (int p = 0; p < 2; ++p) {
    if (!prob.phase[p].active) continue;
    if (!(prob.phase[p].diffusivity > 0.0))
      throw std::invalid_argument("active phase requires positive diffusivity");
    if (!prob.steady && !(prob.phase[p].capacity > 0.0))
      throw std::invalid_argument("unsteady run requires positive capacity");
  }
  const bool jump = std::holds_alternative<InterfaceJump>(prob.interface_condition);
  if (prob.two_phase() && !jump)
    throw std::invalid_argument("two active phases require the jump coupling");
  if (jump && !prob.two_phase())
    throw std::invalid_argument("jump coupling requires both phases active");

  const CartesianGrid& g = ms.grid;
  for (int axis = 0; axis < g.dim; ++axis) {
    for (int side = 0; side < 2; ++side) {
      if (prob.outer[axis][side].kind != OuterBCKind::none) continue;
      double area = 0.0;
      for (int c = 0; c < g.cell_count(); ++c) {
        auto co = g.cell_coords(c);
        if (co[axis] != (side == 0 ? 0 : g.n[axis] - 1)) continue;
        if (side == 1) co[axis] += 1;
        const int f = g.face_index(axis, co[0], co[1], co[2]);
        for (int p = 0; p < 2; ++p)
          if (prob.phase[p].active) area += ms.aperture[p][axis][f];
      }
      if (area > 0.0)
        throw std::invalid_argument("boundary side (axis " + std::to_string(axis) +
                                    ", " + (side == 0 ? "low" : "high") +
                                    ") carries phase area but no condition");
    }
  }
}

}  // namespace cutcell
