#ifndef LMSTATE_VOLTERRA_HPP
#define LMSTATE_VOLTERRA_HPP

#include <utility>
#include <vector>

#include "lmstate/step_function.hpp"
#include "lmstate/step_surface.hpp"
#include "lmstate/types.hpp"

namespace lmstate {

// Purely atomic matrix-valued measure on (origin, inf): one dim x dim
// matrix per atom time.
struct MatrixMeasure1D {
  double origin = 0.0;
  int dim = 0;
  std::vector<double> times;   // sorted, distinct, > origin
  std::vector<Matrix> atoms;   // one per time

  Matrix cumulative(double t) const;
  void validate() const;
};

// Purely atomic matrix-valued measure on (origin, inf)^2. The atom at
// cell (a, b) sits at (grid1[a], grid2[b]) and carries the rectangle
// mass of the cell ((grid1[a-1], grid1[a]] x (grid2[b-1], grid2[b]]).
struct MatrixMeasure2D {
  double origin = 0.0;
  int dim = 0;
  std::vector<double> grid1;  // sorted, distinct, > origin
  std::vector<double> grid2;
  std::vector<Matrix> cells;  // row-major: index a * grid2.size() + b

  static MatrixMeasure2D zero(double origin, std::vector<double> grid1,
                              std::vector<double> grid2, int dim);

  int rows() const { return static_cast<int>(grid1.size()); }
  int cols() const { return static_cast<int>(grid2.size()); }
  const Matrix& cell(int a, int b) const { return cells[static_cast<std::size_t>(a) * grid2.size() + b]; }
  Matrix& cell(int a, int b) { return cells[static_cast<std::size_t>(a) * grid2.size() + b]; }

  // Sum of atom masses over (lo1, hi1] x (lo2, hi2] (no alignment needed:
  // this is a plain sum over atoms inside the rectangle).
  Matrix cumulative(double t1, double t2) const;
  void validate() const;
};

// Half-open rectangle (lo1, hi1] x (lo2, hi2] used for grid-aligned
// integration domains.
struct TimeRect {
  double lo1, hi1, lo2, hi2;
};

// Surface of dim-vectors on the closed node grid {origin, grid1...} x
// {origin, grid2...}; cadlag in each coordinate between nodes.
class VectorSurface2D {
 public:
  VectorSurface2D() = default;
  VectorSurface2D(double origin, std::vector<double> grid1, std::vector<double> grid2,
                  int dim);

  double origin() const { return origin_; }
  const std::vector<double>& grid1() const { return grid1_; }
  const std::vector<double>& grid2() const { return grid2_; }
  int dim() const { return dim_; }

  // Node (a, b): a = 0 or b = 0 address the boundary (coordinate at origin),
  // otherwise time (grid1[a-1], grid2[b-1]).
  Vector& node(int a, int b) { return nodes_[index(a, b)]; }
  const Vector& node(int a, int b) const { return nodes_[index(a, b)]; }

  // Extract one component as a value surface (including boundaries).
  StepSurface2D component(int k) const;

 private:
  std::size_t index(int a, int b) const;

  double origin_ = 0.0;
  std::vector<double> grid1_, grid2_;
  int dim_ = 0;
  std::vector<Vector> nodes_;  // (p+1) * (q+1)
};

// Surface of dim x dim matrices on the same node layout; the integrand
// carrier for matrix-valued Lebesgue-Stieltjes integrals.
class MatrixSurface2D {
 public:
  MatrixSurface2D() = default;
  MatrixSurface2D(double origin, std::vector<double> grid1, std::vector<double> grid2,
                  int dim);

  double origin() const { return origin_; }
  const std::vector<double>& grid1() const { return grid1_; }
  const std::vector<double>& grid2() const { return grid2_; }
  int dim() const { return dim_; }

  Matrix& node(int a, int b) { return nodes_[index(a, b)]; }
  const Matrix& node(int a, int b) const { return nodes_[index(a, b)]; }

 private:
  std::size_t index(int a, int b) const;

  double origin_ = 0.0;
  std::vector<double> grid1_, grid2_;
  int dim_ = 0;
  std::vector<Matrix> nodes_;
};

// sum over atoms u in rect of F(u-) * G(atom mass). The rectangle must be
// aligned with G's grid (bounds at the origin, on a grid value, or +inf).
Matrix ls_integral_2d(const MatrixSurface2D& F, const MatrixMeasure2D& G,
                      const TimeRect& rect);

// Ordered product prod_{atoms in (from, to]} (Id + atom). Row sums are
// preserved when every atom has zero row sums.
Matrix product_integral_1d(const MatrixMeasure1D& measure, double from, double to);

// Peano series P(rect, L) = Id + sum over strictly increasing atom chains
// (both coordinates strictly increasing between consecutive atoms) of the
// ordered mass products. Exact on finite grids; `tolerance` allows early
// termination once a whole chain-length term falls below it in max-abs
// norm (0 keeps every term).
Matrix peano_series_2d(const MatrixMeasure2D& L, const TimeRect& rect,
                       double tolerance = 0.0);

// Forward solution of Y(t) = phi(t) + int_(origin, t] Y(u-) L(du) on the
// node grid; exact for purely atomic measures. phi and L must share grids.
VectorSurface2D solve_volterra_2d(const VectorSurface2D& phi, const MatrixMeasure2D& L);

// Same solution through the closed form
//   Y(t) = phi(t) + int phi(u-) L(du) P((u, t], L),
// used to cross-validate the forward recursion on small grids.
VectorSurface2D solve_volterra_2d_peano(const VectorSurface2D& phi,
                                        const MatrixMeasure2D& L);

// Max-abs residual of the Volterra equation at every node when plugging Y
// back in: ||Y(t) - phi(t) - int_(origin,t] Y(u-) L(du)||.
double volterra_residual(const VectorSurface2D& Y, const VectorSurface2D& phi,
                         const MatrixMeasure2D& L);

// Max-abs norm of P(rect, A) - P(rect, B) - int_rect P(rect cap (0, u), A)
// (A(du) - B(du)) P(rect cap (u, inf), B). A and B must share grids.
double duhamel_residual(const MatrixMeasure2D& A, const MatrixMeasure2D& B,
                        const TimeRect& rect);

// ||f||_v1 in one dimension: sup norm plus total jump variation.
double variation_1d(const StepFunction1D& f);

// Two-dimensional variation: the full-grid sum of absolute rectangle
// increments, plus the variation of both boundary sections, minus the
// sup norm of the surface.
double variation_2d(const StepSurface2D& f);

// Returns (|int f dg|, ||f||_inf * ||g||_v1^(2)) over the common grid
// rectangle; f is evaluated at the atoms of g.
std::pair<double, double> integral_bound_check(const StepSurface2D& f,
                                               const StepSurface2D& g);

}  // namespace lmstate

#endif
