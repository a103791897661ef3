#pragma once

#include <memory>
#include <vector>

#include "cutcell/grid.hpp"
#include "cutcell/vec.hpp"

namespace cutcell {

// Static embedded geometry described by a level set psi. The light phase
// occupies {psi < 0}, the dark phase {psi > 0}, and the interface is {psi = 0}.
class ImplicitGeometry {
 public:
  virtual ~ImplicitGeometry() = default;
  virtual double psi(const Vec3& p) const = 0;
};

// psi(x) = n.(x - p); the light phase is the side the normal points away from.
class HalfSpace final : public ImplicitGeometry {
 public:
  HalfSpace(const Vec3& normal, const Vec3& point) : n_(normal), p_(point) {}
  double psi(const Vec3& p) const override { return dot(n_, p - p_); }

 private:
  Vec3 n_, p_;
};

// psi(x) = |x - c| - R: light phase inside the ball. `dim` restricts the
// distance to the leading coordinates, so dim=2 gives a disk extruded along z
// (usable on 2D grids regardless of the collapsed z coordinate).
class Ball final : public ImplicitGeometry {
 public:
  Ball(const Vec3& center, double radius, int dim = 3)
      : c_(center), r_(radius), dim_(dim) {}
  double psi(const Vec3& p) const override {
    Vec3 d = p - c_;
    for (int a = dim_; a < 3; ++a) d[a] = 0.0;
    return norm(d) - r_;
  }

 private:
  Vec3 c_;
  double r_;
  int dim_;
};

// Planar star-shaped contour r(t) = a + b*cos(k*t) around `center`, extruded
// trivially in z. psi = r - r(theta), so the light phase is the interior.
class TrigStar final : public ImplicitGeometry {
 public:
  TrigStar(const Vec3& center, double a, double b, int k)
      : c_(center), a_(a), b_(b), k_(k) {}
  double psi(const Vec3& p) const override;

 private:
  Vec3 c_;
  double a_, b_;
  int k_;
};

// Swaps the two phases of another geometry.
class Complement final : public ImplicitGeometry {
 public:
  explicit Complement(std::shared_ptr<const ImplicitGeometry> inner)
      : inner_(std::move(inner)) {}
  double psi(const Vec3& p) const override { return -inner_->psi(p); }

 private:
  std::shared_ptr<const ImplicitGeometry> inner_;
};

// Level set sampled at the nodes of a Cartesian grid, evaluated by
// multilinear interpolation. Queries outside the grid clamp to it.
class SampledLevelSet final : public ImplicitGeometry {
 public:
  SampledLevelSet(CartesianGrid grid, std::vector<double> node_values);
  double psi(const Vec3& p) const override;

 private:
  CartesianGrid grid_;
  std::vector<double> values_;  // (n0+1)*(n1+1)*(n2+1), x fastest
};

}  // namespace cutcell
