#include "cutcell/bench_cases.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "cutcell/assembly.hpp"
#include "cutcell/exact_solutions.hpp"
#include "cutcell/fields.hpp"
#include "cutcell/solver.hpp"

namespace cutcell {

namespace {

// ===== ladder helpers =====

CartesianGrid square(double lo, double hi, int n) {
  return make_uniform_grid(2, {lo, lo, 0}, {hi, hi, 0}, {n, n, 1});
}

CartesianGrid cube(double lo, double hi, int n) {
  return make_uniform_grid(3, {lo, lo, lo}, {hi, hi, hi}, {n, n, n});
}

CartesianGrid line(double lo, double hi, int n) {
  return make_uniform_grid(1, {lo, 0, 0}, {hi, 0, 0}, {n, 1, 1});
}

OuterBC dirichlet_bc(ScalarFn v) { return {OuterBCKind::dirichlet, std::move(v), 0.0}; }
OuterBC neumann0_bc() { return {OuterBCKind::neumann, constant_fn(0.0), 0.0}; }

void all_sides(ProblemSpec& prob, int dim, const OuterBC& bc) {
  for (int a = 0; a < dim; ++a)
    for (int s = 0; s < 2; ++s) prob.outer[a][s] = bc;
}

double pick_theta(const CaseOverrides& ov, double dflt) {
  return ov.theta >= 0.0 ? ov.theta : dflt;
}

// ===== case builders =====

BenchCase star_case() {
  BenchCase bc;
  bc.id = "jc1_star";
  bc.summary = "steady Poisson in a six-lobed star, interface Dirichlet data";
  bc.dim = 2;
  bc.default_levels = 4;
  bc.full_levels = 5;
  bc.max_levels = 6;
  bc.level = [](int lv, const CaseOverrides&) {
    CaseLevel L;
    const int n = 32 << lv;
    L.grid = square(-0.5, 0.5, n);
    L.h = 1.0 / n;
    L.geometry = std::make_shared<TrigStar>(Vec3{0, 0, 0}, 0.30, 0.15, 6);
    const CubicHarmonicBlend ex;
    L.prob.phase[0].active = true;
    L.prob.phase[0].source = [ex](const Vec3& p, double) { return ex.source(p.x, p.y); };
    L.prob.interface_condition =
        InterfaceDirichlet{[ex](const Vec3& p, double) { return ex.value(p.x, p.y); }};
    L.prob.steady = true;
    L.reference.value = [ex](Phase, const Vec3& p, double) { return ex.value(p.x, p.y); };
    L.reference.gradient = [ex](Phase, const Vec3& p, double) {
      return ex.gradient(p.x, p.y);
    };
    return L;
  };
  return bc;
}

BenchCase flower_case() {
  BenchCase bc;
  bc.id = "jc2_flower";
  bc.summary = "steady Laplace between a box at 0 and a flower-shaped hole at 1";
  bc.dim = 2;
  bc.track_bounds = true;
  bc.bounds_lo = 0.0;
  bc.bounds_hi = 1.0;
  bc.default_levels = 6;
  bc.full_levels = 7;
  bc.max_levels = 8;
  bc.level = [](int lv, const CaseOverrides&) {
    CaseLevel L;
    const int n = 4 << lv;
    L.grid = square(0.0, 1.0, n);
    L.h = 1.0 / n;
    L.geometry = std::make_shared<TrigStar>(Vec3{0.5, 0.5, 0}, 0.25, 0.05, 6);
    L.prob.phase[1].active = true;
    L.prob.interface_condition = InterfaceDirichlet{constant_fn(1.0)};
    all_sides(L.prob, 2, dirichlet_bc(constant_fn(0.0)));
    L.prob.steady = true;
    return L;
  };
  return bc;
}

BenchCase robin_disk_case() {
  BenchCase bc;
  bc.id = "robin_disk";
  bc.summary = "steady Poisson in the unit disk with a Robin interface";
  bc.dim = 2;
  bc.default_levels = 6;
  bc.full_levels = 6;
  bc.max_levels = 7;
  bc.level = [](int lv, const CaseOverrides&) {
    CaseLevel L;
    const int n = 8 << lv;
    L.grid = square(0.0, 2.0, n);
    L.h = 2.0 / n;
    L.geometry = std::make_shared<Ball>(Vec3{1, 1, 0}, 1.0, 2);
    const ParaboloidField ex{1.0, 1.0};
    L.prob.phase[0].active = true;
    L.prob.phase[0].source = constant_fn(1.0);
    L.prob.interface_condition = InterfaceRobin{1.0, constant_fn(1.0)};
    // The disk is inscribed: apertures on the box sides are zero except for
    // snapping slivers at the four tangency points, which the exact data
    // closes consistently.
    all_sides(L.prob, 2,
              dirichlet_bc([ex](const Vec3& p, double) { return ex.value(p.x, p.y); }));
    L.prob.steady = true;
    L.reference.value = [ex](Phase, const Vec3& p, double) { return ex.value(p.x, p.y); };
    L.reference.gradient = [ex](Phase, const Vec3& p, double) {
      return ex.gradient(p.x, p.y);
    };
    return L;
  };
  return bc;
}

BenchCase robin_sphere_case() {
  BenchCase bc;
  bc.id = "robin_sphere_3d";
  bc.summary = "cooling of the unit ball through a Robin interface";
  bc.dim = 3;
  bc.unsteady = true;
  bc.default_levels = 2;
  bc.full_levels = 4;
  bc.max_levels = 4;
  auto series = std::make_shared<CoolingBallSeries>(1.0, 1.0, 1.0, 1.0);
  bc.level = [series](int lv, const CaseOverrides& ov) {
    CaseLevel L;
    const int n = 16 << lv;
    L.grid = cube(0.0, 4.0, n);
    L.h = 4.0 / n;
    L.geometry = std::make_shared<Ball>(Vec3{2, 2, 2}, 1.0, 3);
    L.prob.phase[0].active = true;
    L.prob.phase[0].initial = constant_fn(1.0);
    L.prob.interface_condition = InterfaceRobin{1.0, constant_fn(0.0)};
    L.prob.steady = false;
    L.prob.theta = pick_theta(ov, 0.5);
    L.prob.t_final = 0.1;
    L.prob.dt = snapped_dt(L.prob.t_final, 0.25 * L.h * L.h);
    L.reference.value = [series](Phase, const Vec3& p, double t) {
      const double r = norm(p - Vec3{2, 2, 2});
      return series->value(std::min(r, series->radius()), t);
    };
    return L;
  };
  return bc;
}

BenchCase conservation_case() {
  BenchCase bc;
  bc.id = "neumann_conservation_3d";
  bc.summary = "insulated exterior of a sphere, content drift diagnostic";
  bc.dim = 3;
  bc.unsteady = true;
  bc.default_levels = 1;
  bc.full_levels = 1;
  bc.max_levels = 2;
  bc.level = [](int lv, const CaseOverrides& ov) {
    CaseLevel L;
    const int n = 32 << lv;
    L.grid = cube(0.0, 4.0, n);
    L.h = 4.0 / n;
    L.geometry = std::make_shared<Ball>(Vec3{2, 2, 2}, 1.0, 3);
    L.prob.phase[1].active = true;
    L.prob.phase[1].initial = [](const Vec3& p, double) { return 1.0 + (p.x - 2.0) / 2.0; };
    L.prob.interface_condition = InterfaceRobin{0.0, constant_fn(0.0)};
    all_sides(L.prob, 3, neumann0_bc());
    L.prob.steady = false;
    L.prob.theta = pick_theta(ov, 0.5);
    L.prob.t_final = 0.1;
    L.prob.dt = snapped_dt(L.prob.t_final, 0.25 * L.h * L.h);
    return L;
  };
  return bc;
}

BenchCase jump_1d_case() {
  BenchCase bc;
  bc.id = "jump_1d";
  bc.summary = "1D two-phase step with a weighted value jump at the interface";
  bc.dim = 1;
  bc.unsteady = true;
  bc.default_levels = 7;
  bc.full_levels = 7;
  bc.max_levels = 9;
  bc.level = [](int lv, const CaseOverrides& ov) {
    CaseLevel L;
    const int n = 4 << lv;
    L.grid = line(0.0, 8.0, n);
    L.h = 8.0 / n;
    L.geometry = std::make_shared<HalfSpace>(Vec3{1, 0, 0}, Vec3{4.01, 0, 0});
    const double lam = ov.lambda > 0.0 ? ov.lambda : 100.0;
    const StepShareProfile prof{1.0, lam, 4.01};
    for (int p = 0; p < 2; ++p) L.prob.phase[p].active = true;
    L.prob.phase[0].initial = [prof](const Vec3& p, double t) {
      return prof.value_light(p.x, t);
    };
    L.prob.phase[1].initial = [prof](const Vec3& p, double t) {
      return prof.value_dark(p.x, t);
    };
    L.prob.interface_condition = InterfaceJump{lam, {}};
    L.prob.outer[0][0] =
        dirichlet_bc([prof](const Vec3& p, double t) { return prof.value_light(p.x, t); });
    L.prob.outer[0][1] =
        dirichlet_bc([prof](const Vec3& p, double t) { return prof.value_dark(p.x, t); });
    L.prob.steady = false;
    L.prob.theta = pick_theta(ov, 1.0);
    L.prob.t_final = 0.1;
    L.prob.dt = snapped_dt(L.prob.t_final, 0.25 * L.h * L.h);
    L.reference.value = [prof](Phase p, const Vec3& q, double t) {
      return p == Phase::light ? prof.value_light(q.x, t) : prof.value_dark(q.x, t);
    };
    return L;
  };
  return bc;
}

BenchCase circle_case() {
  BenchCase bc;
  bc.id = "circle_2phase";
  bc.summary = "hot disk exchanging with an unbounded matched medium";
  bc.dim = 2;
  bc.unsteady = true;
  bc.track_transfer = true;
  bc.default_levels = 4;
  bc.full_levels = 4;
  bc.max_levels = 5;
  auto ex = std::make_shared<DiskExchangeSolution>(0.025, 0.025, 2.0, 1.0);
  bc.level = [ex](int lv, const CaseOverrides& ov) {
    CaseLevel L;
    const int n = 16 << lv;
    L.grid = square(0.0, 8.0, n);
    L.h = 8.0 / n;
    L.geometry = std::make_shared<Complement>(std::make_shared<Ball>(Vec3{4, 4, 0}, 2.0, 2));
    for (int p = 0; p < 2; ++p) {
      L.prob.phase[p].active = true;
      L.prob.phase[p].diffusivity = 0.025;
    }
    L.prob.phase[1].initial = constant_fn(1.0);
    L.prob.interface_condition = InterfaceJump{ov.lambda > 0.0 ? ov.lambda : 1.0, {}};
    // The walls sit two radii outside the disk; with the final time used here
    // the analytic far field carries no appreciable flux there.
    all_sides(L.prob, 2, neumann0_bc());
    L.prob.steady = false;
    L.prob.theta = pick_theta(ov, 0.5);
    L.prob.t_final = 16.0;
    L.prob.dt = snapped_dt(L.prob.t_final, 0.25 * L.h * L.h);
    L.reference.value = [ex](Phase p, const Vec3& q, double t) {
      const double r = norm(q - Vec3{4, 4, 0});
      return p == Phase::dark ? ex->value_inner(std::min(r, ex->radius()), t)
                              : ex->value_outer(std::max(r, ex->radius()), t);
    };
    L.reference.transfer = [ex](double t) { return ex->interface_flow(t); };
    return L;
  };
  return bc;
}

BenchCase brown_case() {
  BenchCase bc;
  bc.id = "brown_sphere_3d";
  bc.summary = "hot unit ball exchanging with a slower unbounded medium";
  bc.dim = 3;
  bc.unsteady = true;
  bc.default_levels = 2;
  bc.full_levels = 3;
  bc.max_levels = 4;
  auto ex = std::make_shared<BallExchangeSolution>(1.0, 0.2, 1.0, 1.0);
  bc.level = [ex](int lv, const CaseOverrides& ov) {
    CaseLevel L;
    const int n = 8 << lv;
    L.grid = cube(0.0, 4.0, n);
    L.h = 4.0 / n;
    L.geometry = std::make_shared<Ball>(Vec3{2, 2, 2}, 1.0, 3);
    L.prob.phase[0].active = true;
    L.prob.phase[0].diffusivity = 1.0;
    L.prob.phase[0].initial = constant_fn(1.0);
    L.prob.phase[1].active = true;
    L.prob.phase[1].diffusivity = 0.2;
    L.prob.interface_condition = InterfaceJump{ov.lambda > 0.0 ? ov.lambda : 1.0, {}};
    // Far-field truncation: at t_final the analytic field decays like
    // exp(-25) before reaching the walls, far below discretization error.
    all_sides(L.prob, 3, neumann0_bc());
    L.prob.steady = false;
    L.prob.theta = pick_theta(ov, 0.5);
    L.prob.t_final = 0.05;
    L.prob.dt = snapped_dt(L.prob.t_final, 0.25 * L.h * L.h);
    L.reference.value = [ex](Phase p, const Vec3& q, double t) {
      const double r = norm(q - Vec3{2, 2, 2});
      return p == Phase::light ? ex->value_inner(std::min(r, ex->radius()), t)
                               : ex->value_outer(std::max(r, ex->radius()), t);
    };
    return L;
  };
  return bc;
}

const std::vector<BenchCase>& registry() {
  static const std::vector<BenchCase> cases = {
      star_case(),        flower_case(),  robin_disk_case(), robin_sphere_case(),
      conservation_case(), jump_1d_case(), circle_case(),     brown_case(),
  };
  return cases;
}

// ===== report plumbing =====

SolverOptions pick_solver(long dofs) {
  SolverOptions opt;
  if (dofs > 20000) opt.kind = LinearSolverKind::bicgstab_ilut;
  return opt;
}

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_errors_csv(const std::filesystem::path& dir, const CaseReport& rep) {
  std::ofstream os(dir / "errors.csv");
  os << "h,N,e_all,e_reg,e_cut,p_all,p_reg,p_cut\n";
  const LevelReport* prev = nullptr;
  for (const auto& lr : rep.levels) {
    if (!lr.has_l2) continue;
    os << fmt_g(lr.h) << ',' << lr.cells_x << ',' << fmt_g(lr.l2.all) << ','
       << fmt_g(lr.l2.reg) << ',' << fmt_g(lr.l2.cut);
    if (prev) {
      const double lh = std::log(prev->h / lr.h);
      os << ',' << fmt_g(std::log(prev->l2.all / lr.l2.all) / lh) << ','
         << fmt_g(std::log(prev->l2.reg / lr.l2.reg) / lh) << ','
         << fmt_g(std::log(prev->l2.cut / lr.l2.cut) / lh);
    } else {
      os << ",,,";
    }
    os << '\n';
    prev = &lr;
  }
}

void write_trace_csv(const std::filesystem::path& file, const char* header,
                     const std::vector<double>& t, const std::vector<double>& a,
                     const std::vector<double>* b = nullptr) {
  std::ofstream os(file);
  os << header << '\n';
  for (size_t i = 0; i < t.size(); ++i) {
    os << fmt_g(t[i]) << ',' << fmt_g(a[i]);
    if (b) os << ',' << fmt_g((*b)[i]);
    os << '\n';
  }
}

// Dirichlet data is part of the discrete solution; the extrema scan folds it
// in so boundedness reports cover the boundary trace as well.
void fold_dirichlet_extrema(const AssembledSystem& sys, const MomentSet& ms, double t,
                            BoundsReport& rep) {
  for (const auto& cl : sys.closures) {
    const Vec3 ctr = ms.grid.cell_center(cl.cell);
    const int side = cl.point[cl.axis] < ctr[cl.axis] ? 0 : 1;
    if (sys.prob.outer[cl.axis][side].kind != OuterBCKind::dirichlet) continue;
    const double v = cl.g(cl.point, t);
    rep.min = std::min(rep.min, v);
    rep.max = std::max(rep.max, v);
  }
}

void finish_fits(CaseReport& rep) {
  std::vector<double> h, ea, er, ec, ha;
  for (const auto& lr : rep.levels) {
    if (lr.has_l2) {
      h.push_back(lr.h);
      ea.push_back(lr.l2.all);
      er.push_back(lr.l2.reg);
      ec.push_back(lr.l2.cut);
    }
    if (lr.has_h1) ha.push_back(lr.h1.all);
  }
  if (h.size() >= 2) {
    rep.has_l2 = true;
    rep.l2_all = convergence_orders(h, ea);
    rep.l2_reg = convergence_orders(h, er);
    rep.l2_cut = convergence_orders(h, ec);
  }
  if (ha.size() >= 2) {
    rep.has_h1 = true;
    rep.h1_all = convergence_orders(std::vector<double>(h.end() - ha.size(), h.end()), ha);
  }
}

LevelReport run_level(const BenchCase& bc, const CaseLevel& L,
                      const std::filesystem::path& out_dir, int lv) {
  const auto t0 = std::chrono::steady_clock::now();
  const MomentSet ms = compute_moments(L.grid, *L.geometry);
  validate(L.prob, ms);
  const AssembledSystem sys = assemble(ms, L.prob);

  LevelReport lr;
  lr.h = L.h;
  lr.cells_x = L.grid.n[0];
  lr.dofs = sys.dof.total;
  lr.deactivated_faces = sys.deactivated_faces;

  const SolverOptions opt = pick_solver(sys.dof.total);
  Eigen::VectorXd x;
  if (L.prob.steady) {
    x = solve_steady(sys, 0.0, opt);
  } else {
    const UnsteadyResult res = run_unsteady(sys, opt);
    x = res.x;
    lr.times = res.times;
    lr.content = res.content;
    lr.drift.resize(res.content.size());
    const double i0 = res.content.empty() ? 0.0 : res.content.front();
    const double scale = std::max(std::abs(i0), 1e-300);
    for (size_t i = 0; i < res.content.size(); ++i)
      lr.drift[i] = std::abs(res.content[i] - i0) / scale;
    if (bc.track_transfer) {
      lr.transfer_times = res.exchange_times;
      lr.transfer = res.exchange[1];
    }
  }

  const double tf = L.prob.steady ? 0.0 : L.prob.t_final;
  const FieldState fs = to_state(sys, x, tf);

  if (L.reference.value) {
    const auto& ref = L.reference.value;
    lr.l2 = l2_error(ms, L.prob, fs,
                     [&](Phase p, const Vec3& q) { return ref(p, q, tf); });
    lr.has_l2 = true;
  }
  if (L.reference.value && L.reference.gradient) {
    const auto& ref = L.reference.value;
    const auto& gref = L.reference.gradient;
    lr.h1 = h1_error(
        ms, L.prob, fs, [&](Phase p, const Vec3& q) { return ref(p, q, tf); },
        [&](Phase p, const Vec3& q) { return gref(p, q, tf); });
    lr.has_h1 = true;
  }
  if (bc.track_bounds) {
    lr.bounds = bounds_report(ms, L.prob, fs, bc.bounds_lo, bc.bounds_hi);
    fold_dirichlet_extrema(sys, ms, tf, lr.bounds);
    lr.has_bounds = true;
  }
  if (bc.track_transfer && L.prob.phase[1].active) {
    lr.transfer_final = interfacial_transfer(sys, 1, x);
    if (!L.prob.steady) {
      lr.transfer_times.push_back(tf);
      lr.transfer.push_back(lr.transfer_final);
    }
    if (L.reference.transfer) {
      const double qr = L.reference.transfer(tf);
      lr.transfer_error = std::abs(lr.transfer_final - qr) / std::abs(qr);
      lr.has_transfer_error = true;
    }
  }
  if (const auto* jc = std::get_if<InterfaceJump>(&L.prob.interface_condition)) {
    const double th = L.prob.steady ? 1.0 : L.prob.theta;
    const double tmid = L.prob.steady ? 0.0 : tf - (1.0 - th) * L.prob.dt;
    double mx = 0.0;
    for (int c = 0; c < ms.grid.cell_count(); ++c) {
      const int gl = sys.dof.gamma[0][c], gd = sys.dof.gamma[1][c];
      if (gl < 0 || gd < 0) continue;
      const double j = jc->jump ? jc->jump(ms.gamma_centroid[c], tmid) : 0.0;
      mx = std::max(mx, std::abs(x[gd] - jc->lambda * x[gl] - j));
    }
    lr.jump_residual = mx;
    lr.has_jump = true;
  }

  if (!out_dir.empty()) {
    std::ofstream os(out_dir / ("field_" + std::to_string(lv) + ".csv"));
    write_checkpoint(os, fs);
    if (!L.prob.steady)
      write_trace_csv(out_dir / "conservation.csv", "t,I,drift", lr.times, lr.content,
                      &lr.drift);
    if (bc.track_transfer)
      write_trace_csv(out_dir / "flux.csv", "t,Qplus", lr.transfer_times, lr.transfer);
  }

  lr.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return lr;
}

}  // namespace

const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& bc : registry()) v.push_back(bc.id);
    return v;
  }();
  return ids;
}

const BenchCase& find_case(const std::string& id) {
  for (const auto& bc : registry())
    if (bc.id == id) return bc;
  throw std::invalid_argument("unknown case: " + id);
}

CaseReport run_case(const BenchCase& bc, const CaseOverrides& ov,
                    const std::filesystem::path& out_dir, std::ostream* log) {
  CaseReport rep;
  rep.id = bc.id;
  int nlev = ov.levels > 0 ? ov.levels : (ov.full_ladder ? bc.full_levels : bc.default_levels);
  nlev = std::min(nlev, bc.max_levels);
  if (nlev < 1) throw std::invalid_argument("run_case: no levels selected");
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);

  try {
    for (int lv = 0; lv < nlev; ++lv) {
      LevelReport lr = run_level(bc, bc.level(lv, ov), out_dir, lv);
      rep.levels.push_back(std::move(lr));
      if (!out_dir.empty()) write_errors_csv(out_dir, rep);
      if (log) {
        const auto& r = rep.levels.back();
        *log << bc.id << " level " << lv << " h=" << r.h << " dofs=" << r.dofs;
        if (r.has_l2) *log << " e_all=" << r.l2.all;
        *log << " (" << r.wall_seconds << " s)\n";
      }
    }
  } catch (...) {
    finish_fits(rep);
    throw;
  }
  finish_fits(rep);
  return rep;
}

}  // namespace cutcell
