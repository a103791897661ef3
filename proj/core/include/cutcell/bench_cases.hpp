#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "cutcell/conditions.hpp"
#include "cutcell/geometry.hpp"
#include "cutcell/norms.hpp"

namespace cutcell {

// ===== benchmark registry =====
//
// Each registered case fixes a geometry, a problem specification, a
// refinement ladder, and (where available) the analytical reference used for
// error columns. Levels index the ladder from the coarsest grid; a builder
// accepts any level index, and the default/full ladder lengths pick the
// ranges used by the verification gates.

// Per-phase space-time reference data. Null members mean the corresponding
// report column is not produced.
struct CaseReference {
  std::function<double(Phase, const Vec3&, double)> value;
  std::function<Vec3(Phase, const Vec3&, double)> gradient;
  std::function<double(double)> transfer;  // dark-phase interfacial rate
};

// One refinement level, ready to mesh and assemble.
struct CaseLevel {
  CartesianGrid grid;
  std::shared_ptr<const ImplicitGeometry> geometry;
  ProblemSpec prob;
  double h = 0.0;
  CaseReference reference;
};

struct CaseOverrides {
  int levels = 0;        // 0: ladder chosen by full_ladder
  double theta = -1.0;   // <0: case default
  double lambda = -1.0;  // <0: case default (jump-law cases only)
  bool full_ladder = false;
};

struct BenchCase {
  std::string id;
  std::string summary;
  int dim = 0;
  bool unsteady = false;
  bool track_bounds = false;    // scan extrema against bounds_lo/hi
  bool track_transfer = false;  // record the interfacial transfer trace
  double bounds_lo = 0.0, bounds_hi = 1.0;
  int default_levels = 0;
  int full_levels = 0;
  int max_levels = 0;
  std::function<CaseLevel(int, const CaseOverrides&)> level;
};

const std::vector<std::string>& case_ids();
const BenchCase& find_case(const std::string& id);  // throws std::invalid_argument

// ===== reports =====

struct LevelReport {
  double h = 0.0;
  int cells_x = 0;  // cells along the first axis
  long dofs = 0;
  int deactivated_faces = 0;
  double wall_seconds = 0.0;

  bool has_l2 = false, has_h1 = false;
  ErrorNorms l2, h1;

  bool has_bounds = false;
  BoundsReport bounds;

  // Unsteady traces, aligned per step.
  std::vector<double> times, content, drift;
  std::vector<double> transfer_times, transfer;
  bool has_transfer_error = false;
  double transfer_final = 0.0;  // evaluated on the final state
  double transfer_error = 0.0;  // relative, against the reference rate

  bool has_jump = false;
  double jump_residual = 0.0;  // max |gamma_dark - lambda gamma_light - jump|
};

struct CaseReport {
  std::string id;
  std::vector<LevelReport> levels;
  bool has_l2 = false, has_h1 = false;
  OrderFit l2_all, l2_reg, l2_cut, h1_all;
};

// Runs the selected ladder. With a nonempty out_dir, writes errors.csv
// (h, N, e_all, e_reg, e_cut, p_all, p_reg, p_cut), conservation.csv
// (t, I, drift) and flux.csv (t, Qplus) for the deepest completed level,
// and a field_<level>.csv checkpoint per level. Files for completed levels
// survive a failure at a deeper level (the error is rethrown afterwards).
// `log`, when given, receives one progress line per level.
CaseReport run_case(const BenchCase& bc, const CaseOverrides& ov = {},
                    const std::filesystem::path& out_dir = {},
                    std::ostream* log = nullptr);

}  // namespace cutcell
