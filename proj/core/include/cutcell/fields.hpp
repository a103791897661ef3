#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "cutcell/moments.hpp"

namespace cutcell {

// Discrete state: one bulk value per (phase, cell) and one interfacial value
// per (phase, cut cell). Entries where a phase or interface is absent are
// kept at zero and never read by the operators.
struct FieldState {
  double time = 0.0;
  std::array<std::vector<double>, 2> bulk;
  std::array<std::vector<double>, 2> gamma;
};

FieldState make_state(const MomentSet& ms, double time = 0.0);

// Columns: cell index, phase, slot (bulk|gamma), value; plus a time header.
void write_checkpoint(std::ostream& os, const FieldState& fs);
FieldState read_checkpoint(std::istream& is, const MomentSet& ms);

}  // namespace cutcell
