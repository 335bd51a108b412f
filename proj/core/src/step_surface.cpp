#include "lmstate/step_surface.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lmstate {

namespace {
void check_grid(const std::vector<double>& grid, double origin, const char* which) {
  double prev = origin;
  for (double t : grid) {
    if (t <= prev) {
      throw std::invalid_argument(std::string("StepSurface2D: ") + which +
                                  " must be sorted, distinct and > origin");
    }
    prev = t;
  }
}
}  // namespace

StepSurface2D::StepSurface2D(double origin, std::vector<double> grid1,
                             std::vector<double> grid2, Matrix nodes)
    : origin_(origin), grid1_(std::move(grid1)), grid2_(std::move(grid2)),
      nodes_(std::move(nodes)) {
  check_grid(grid1_, origin_, "grid1");
  check_grid(grid2_, origin_, "grid2");
  if (nodes_.rows() != static_cast<Eigen::Index>(grid1_.size()) + 1 ||
      nodes_.cols() != static_cast<Eigen::Index>(grid2_.size()) + 1) {
    throw std::invalid_argument("StepSurface2D: node matrix shape mismatch");
  }
}

StepSurface2D StepSurface2D::constant(double origin, double value) {
  Matrix nodes(1, 1);
  nodes(0, 0) = value;
  return StepSurface2D(origin, {}, {}, std::move(nodes));
}

int StepSurface2D::index1(double t) const {
  return static_cast<int>(std::upper_bound(grid1_.begin(), grid1_.end(), t) -
                          grid1_.begin());
}
int StepSurface2D::index2(double t) const {
  return static_cast<int>(std::upper_bound(grid2_.begin(), grid2_.end(), t) -
                          grid2_.begin());
}
int StepSurface2D::strict_index1(double t) const {
  return static_cast<int>(std::lower_bound(grid1_.begin(), grid1_.end(), t) -
                          grid1_.begin());
}
int StepSurface2D::strict_index2(double t) const {
  return static_cast<int>(std::lower_bound(grid2_.begin(), grid2_.end(), t) -
                          grid2_.begin());
}

double StepSurface2D::at(double t1, double t2) const {
  if (t1 < origin_ || t2 < origin_) {
    throw std::invalid_argument("StepSurface2D: evaluation before origin");
  }
  return nodes_(index1(t1), index2(t2));
}

double StepSurface2D::left_limit(double t1, double t2) const {
  if (t1 <= origin_ || t2 <= origin_) {
    throw std::invalid_argument("StepSurface2D: left limit at or before origin");
  }
  return nodes_(strict_index1(t1), strict_index2(t2));
}

double StepSurface2D::rectangle_mass(double u1, double t1, double u2, double t2) const {
  if (u1 > t1 || u2 > t2) {
    throw std::invalid_argument("StepSurface2D: degenerate rectangle");
  }
  const int a0 = index1(u1), a1 = index1(t1);
  const int b0 = index2(u2), b1 = index2(t2);
  return nodes_(a1, b1) - nodes_(a1, b0) - nodes_(a0, b1) + nodes_(a0, b0);
}

double StepSurface2D::cell_mass(int a, int b) const {
  if (a < 1 || a > static_cast<int>(grid1_.size()) || b < 1 ||
      b > static_cast<int>(grid2_.size())) {
    throw std::out_of_range("StepSurface2D: cell index out of range");
  }
  return nodes_(a, b) - nodes_(a, b - 1) - nodes_(a - 1, b) + nodes_(a - 1, b - 1);
}

double StepSurface2D::sup_abs() const { return nodes_.cwiseAbs().maxCoeff(); }

std::vector<double> StepSurface2D::boundary1() const {
  std::vector<double> v(grid1_.size());
  for (std::size_t a = 0; a < grid1_.size(); ++a) v[a] = nodes_(static_cast<int>(a) + 1, 0);
  return v;
}

std::vector<double> StepSurface2D::boundary2() const {
  std::vector<double> v(grid2_.size());
  for (std::size_t b = 0; b < grid2_.size(); ++b) v[b] = nodes_(0, static_cast<int>(b) + 1);
  return v;
}

}  // namespace lmstate
