#pragma once

#include <array>
#include <variant>

#include "cutcell/expr.hpp"
#include "cutcell/moments.hpp"

namespace cutcell {

// Conditions on the outer (rectangular) domain boundary. Normal directions
// point out of the domain. For Neumann, `value` prescribes the outward normal
// flux q.n; for Robin, d_n(phi) + beta*phi = value.
enum class OuterBCKind { none, dirichlet, neumann, robin };

struct OuterBC {
  OuterBCKind kind = OuterBCKind::none;
  ScalarFn value;
  double beta = 0.0;
};

// Interface conditions. Normals point out of the phase they apply to.
//
// Dirichlet pins the interfacial unknown directly. Robin enforces
// d_n(phi) + beta*phi = rhs on the interface of a single-phase problem
// (beta = 0 reduces to a prescribed-flux condition along the same code path).
// Jump couples the two phases: phi_dark = lambda*phi_light + jump on the
// interface, together with continuity of the normal flux.
struct InterfaceDirichlet {
  ScalarFn value;
};
struct InterfaceRobin {
  double beta = 0.0;
  ScalarFn rhs;
};
struct InterfaceJump {
  double lambda = 1.0;
  ScalarFn jump;
};
using InterfaceCondition =
    std::variant<InterfaceDirichlet, InterfaceRobin, InterfaceJump>;

struct PhaseSpec {
  bool active = false;
  double diffusivity = 1.0;  // K
  double capacity = 1.0;     // C
  ScalarFn source;           // r(x,t); null means zero
  ScalarFn initial;          // null means zero
};

struct ProblemSpec {
  std::array<PhaseSpec, 2> phase;
  InterfaceCondition interface_condition = InterfaceDirichlet{constant_fn(0.0)};
  std::array<std::array<OuterBC, 2>, 3> outer;  // [axis][side], side 0 low
  double theta = 1.0;  // implicitness of the time discretization
  bool steady = true;
  double dt = 0.0;
  double t_final = 0.0;

  const PhaseSpec& light() const { return phase[0]; }
  const PhaseSpec& dark() const { return phase[1]; }
  bool two_phase() const { return phase[0].active && phase[1].active; }
};

// Rejects inconsistent setups: an inactive phase with two-phase coupling, a
// boundary side carrying phase area but no condition, nonpositive dt for
// unsteady runs, theta outside [0,1]. Throws std::invalid_argument.
void validate(const ProblemSpec& prob, const MomentSet& ms);

}  // namespace cutcell
