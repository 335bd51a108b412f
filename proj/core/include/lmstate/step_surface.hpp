#ifndef LMSTATE_STEP_SURFACE_HPP
#define LMSTATE_STEP_SURFACE_HPP

#include <vector>

#include "lmstate/types.hpp"

namespace lmstate {

// Surface on [origin, inf)^2 that is cadlag in each coordinate and
// piecewise constant between grid lines. Stored are the corner value
// f(origin, origin), the two boundary sections and the values at
// grid1 x grid2 nodes.
class StepSurface2D {
 public:
  StepSurface2D() = default;
  // nodes is (p+1) x (q+1) where p = |grid1|, q = |grid2|; row 0 and
  // column 0 hold the boundary sections (coordinate value = origin).
  StepSurface2D(double origin, std::vector<double> grid1, std::vector<double> grid2,
                Matrix nodes);

  static StepSurface2D constant(double origin, double value);

  double origin() const { return origin_; }
  const std::vector<double>& grid1() const { return grid1_; }
  const std::vector<double>& grid2() const { return grid2_; }
  // Node value; a = 0 or b = 0 address the boundary sections.
  double node(int a, int b) const { return nodes_(a, b); }

  double at(double t1, double t2) const;
  // f(t1-, t2-): left limits in both coordinates.
  double left_limit(double t1, double t2) const;
  // Rectangle increment over (u1, t1] x (u2, t2]; corners must satisfy
  // u1 <= t1, u2 <= t2 and lie at or after the origin.
  double rectangle_mass(double u1, double t1, double u2, double t2) const;
  // Rectangle increment of the grid cell with upper-right node (a, b),
  // 1-based in each coordinate.
  double cell_mass(int a, int b) const;

  double sup_abs() const;
  // 1-D sections along the lower boundaries, as step functions.
  std::vector<double> boundary1() const;  // f(grid1[a], origin)
  std::vector<double> boundary2() const;  // f(origin, grid2[b])
  double corner() const { return nodes_(0, 0); }

 private:
  int index1(double t) const;  // #grid1 values <= t
  int index2(double t) const;
  int strict_index1(double t) const;  // #grid1 values < t
  int strict_index2(double t) const;

  double origin_ = 0.0;
  std::vector<double> grid1_;
  std::vector<double> grid2_;
  Matrix nodes_;  // (p+1) x (q+1)
};

}  // namespace lmstate

#endif
