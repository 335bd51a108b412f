#include "lmstate/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace lmstate {

namespace {

void check_axis(const std::vector<double>& grid, double origin, const char* what) {
  double prev = origin;
  for (double t : grid) {
    if (t <= prev) {
      throw std::invalid_argument(std::string(what) +
                                  ": grid must be sorted, distinct and > origin");
    }
    prev = t;
  }
}

// Index of the last atom <= t, plus one (so it can serve as an exclusive
// upper bound); rejects t that is neither the origin, a grid value nor +inf.
int aligned_bound(const std::vector<double>& grid, double origin, double t) {
  if (t == origin) return 0;
  if (std::isinf(t) && t > 0) return static_cast<int>(grid.size());
  auto it = std::lower_bound(grid.begin(), grid.end(), t);
  if (it == grid.end() || *it != t) {
    throw std::invalid_argument("rectangle bound is not grid-aligned");
  }
  return static_cast<int>(it - grid.begin()) + 1;
}

struct CellRange {
  int a0, a1, b0, b1;  // atoms with a in [a0, a1), b in [b0, b1)
};

CellRange align(const MatrixMeasure2D& L, const TimeRect& rect) {
  CellRange r{};
  r.a0 = aligned_bound(L.grid1, L.origin, rect.lo1);
  r.a1 = aligned_bound(L.grid1, L.origin, rect.hi1);
  r.b0 = aligned_bound(L.grid2, L.origin, rect.lo2);
  r.b1 = aligned_bound(L.grid2, L.origin, rect.hi2);
  if (r.a1 < r.a0 || r.b1 < r.b0) {
    throw std::invalid_argument("degenerate rectangle");
  }
  return r;
}

void check_common_grid(const MatrixMeasure2D& A, const MatrixMeasure2D& B) {
  if (A.origin != B.origin || A.grid1 != B.grid1 || A.grid2 != B.grid2 ||
      A.dim != B.dim) {
    throw std::invalid_argument("measures must share grid and dimension");
  }
}

// Peano chain sum over the atoms selected by `keep`, built term by term
// over chain length. S_k(x) collects all chains of length k ending at x.
Matrix peano_over(const MatrixMeasure2D& L, const std::function<bool(int, int)>& keep,
                  double tolerance) {
  struct Atom {
    int a, b;
    const Matrix* mass;
  };
  std::vector<Atom> atoms;
  for (int a = 0; a < L.rows(); ++a) {
    for (int b = 0; b < L.cols(); ++b) {
      if (keep(a, b) && L.cell(a, b).cwiseAbs().maxCoeff() > 0.0) {
        atoms.push_back({a, b, &L.cell(a, b)});
      }
    }
  }
  Matrix total = Matrix::Identity(L.dim, L.dim);
  if (atoms.empty()) return total;

  std::vector<Matrix> s(atoms.size());
  for (std::size_t x = 0; x < atoms.size(); ++x) s[x] = *atoms[x].mass;
  while (true) {
    Matrix term = Matrix::Zero(L.dim, L.dim);
    for (const auto& sx : s) term += sx;
    total += term;
    if (tolerance > 0.0 && term.cwiseAbs().maxCoeff() <= tolerance) break;

    std::vector<Matrix> next(atoms.size(), Matrix::Zero(L.dim, L.dim));
    bool any = false;
    for (std::size_t x = 0; x < atoms.size(); ++x) {
      Matrix head = Matrix::Zero(L.dim, L.dim);
      bool have = false;
      for (std::size_t y = 0; y < atoms.size(); ++y) {
        if (atoms[y].a < atoms[x].a && atoms[y].b < atoms[x].b) {
          head += s[y];
          have = true;
        }
      }
      if (have) {
        next[x] = head * (*atoms[x].mass);
        any = any || next[x].cwiseAbs().maxCoeff() > 0.0;
      }
    }
    if (!any) break;
    s = std::move(next);
  }
  return total;
}

}  // namespace

Matrix MatrixMeasure1D::cumulative(double t) const {
  Matrix m = Matrix::Zero(dim, dim);
  for (std::size_t k = 0; k < times.size() && times[k] <= t; ++k) m += atoms[k];
  return m;
}

void MatrixMeasure1D::validate() const {
  check_axis(times, origin, "MatrixMeasure1D");
  if (times.size() != atoms.size()) {
    throw std::invalid_argument("MatrixMeasure1D: times/atoms size mismatch");
  }
  for (const Matrix& m : atoms) {
    if (m.rows() != dim || m.cols() != dim) {
      throw std::invalid_argument("MatrixMeasure1D: atom dimension mismatch");
    }
  }
}

MatrixMeasure2D MatrixMeasure2D::zero(double origin, std::vector<double> grid1,
                                      std::vector<double> grid2, int dim) {
  MatrixMeasure2D m;
  m.origin = origin;
  m.grid1 = std::move(grid1);
  m.grid2 = std::move(grid2);
  m.dim = dim;
  m.cells.assign(m.grid1.size() * m.grid2.size(), Matrix::Zero(dim, dim));
  return m;
}

Matrix MatrixMeasure2D::cumulative(double t1, double t2) const {
  Matrix m = Matrix::Zero(dim, dim);
  for (int a = 0; a < rows() && grid1[static_cast<std::size_t>(a)] <= t1; ++a) {
    for (int b = 0; b < cols() && grid2[static_cast<std::size_t>(b)] <= t2; ++b) {
      m += cell(a, b);
    }
  }
  return m;
}

void MatrixMeasure2D::validate() const {
  check_axis(grid1, origin, "MatrixMeasure2D.grid1");
  check_axis(grid2, origin, "MatrixMeasure2D.grid2");
  if (cells.size() != grid1.size() * grid2.size()) {
    throw std::invalid_argument("MatrixMeasure2D: cell count mismatch");
  }
  for (const Matrix& m : cells) {
    if (m.rows() != dim || m.cols() != dim) {
      throw std::invalid_argument("MatrixMeasure2D: cell dimension mismatch");
    }
  }
}

VectorSurface2D::VectorSurface2D(double origin, std::vector<double> grid1,
                                 std::vector<double> grid2, int dim)
    : origin_(origin), grid1_(std::move(grid1)), grid2_(std::move(grid2)), dim_(dim) {
  check_axis(grid1_, origin_, "VectorSurface2D.grid1");
  check_axis(grid2_, origin_, "VectorSurface2D.grid2");
  nodes_.assign((grid1_.size() + 1) * (grid2_.size() + 1), Vector::Zero(dim_));
}

std::size_t VectorSurface2D::index(int a, int b) const {
  return static_cast<std::size_t>(a) * (grid2_.size() + 1) + static_cast<std::size_t>(b);
}

StepSurface2D VectorSurface2D::component(int k) const {
  Matrix nodes(grid1_.size() + 1, grid2_.size() + 1);
  for (std::size_t a = 0; a <= grid1_.size(); ++a) {
    for (std::size_t b = 0; b <= grid2_.size(); ++b) {
      nodes(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          node(static_cast<int>(a), static_cast<int>(b))(k);
    }
  }
  return StepSurface2D(origin_, grid1_, grid2_, std::move(nodes));
}

MatrixSurface2D::MatrixSurface2D(double origin, std::vector<double> grid1,
                                 std::vector<double> grid2, int dim)
    : origin_(origin), grid1_(std::move(grid1)), grid2_(std::move(grid2)), dim_(dim) {
  check_axis(grid1_, origin_, "MatrixSurface2D.grid1");
  check_axis(grid2_, origin_, "MatrixSurface2D.grid2");
  nodes_.assign((grid1_.size() + 1) * (grid2_.size() + 1), Matrix::Zero(dim_, dim_));
}

std::size_t MatrixSurface2D::index(int a, int b) const {
  return static_cast<std::size_t>(a) * (grid2_.size() + 1) + static_cast<std::size_t>(b);
}

Matrix ls_integral_2d(const MatrixSurface2D& F, const MatrixMeasure2D& G,
                      const TimeRect& rect) {
  if (F.origin() != G.origin || F.grid1() != G.grid1 || F.grid2() != G.grid2) {
    throw std::invalid_argument("ls_integral_2d: integrand and measure grids differ");
  }
  const CellRange r = align(G, rect);
  Matrix sum = Matrix::Zero(G.dim, G.dim);
  for (int a = r.a0; a < r.a1; ++a) {
    for (int b = r.b0; b < r.b1; ++b) {
      // F at the lower-left corner left limits = node with the atom's index.
      sum += F.node(a, b) * G.cell(a, b);
    }
  }
  return sum;
}

Matrix product_integral_1d(const MatrixMeasure1D& measure, double from, double to) {
  Matrix prod = Matrix::Identity(measure.dim, measure.dim);
  for (std::size_t k = 0; k < measure.times.size(); ++k) {
    const double t = measure.times[k];
    if (t <= from) continue;
    if (t > to) break;
    prod = prod * (Matrix::Identity(measure.dim, measure.dim) + measure.atoms[k]);
  }
  return prod;
}

Matrix peano_series_2d(const MatrixMeasure2D& L, const TimeRect& rect,
                       double tolerance) {
  const CellRange r = align(L, rect);
  return peano_over(
      L,
      [&r](int a, int b) { return a >= r.a0 && a < r.a1 && b >= r.b0 && b < r.b1; },
      tolerance);
}

VectorSurface2D solve_volterra_2d(const VectorSurface2D& phi, const MatrixMeasure2D& L) {
  if (phi.origin() != L.origin || phi.grid1() != L.grid1 || phi.grid2() != L.grid2 ||
      phi.dim() != L.dim) {
    throw std::invalid_argument("solve_volterra_2d: phi and measure grids differ");
  }
  const int p = L.rows(), q = L.cols(), m = L.dim;
  VectorSurface2D Y(L.origin, L.grid1, L.grid2, m);
  // S(a, b) = sum_{c<=a, d<=b} Y((c,d)-) * mass(c,d), built with the usual
  // inclusion-exclusion prefix recursion. Y((c,d)-) is the node at the
  // atom's own index, which is already final when cell (c,d) is absorbed.
  std::vector<Vector> S(static_cast<std::size_t>(p + 1) * (q + 1), Vector::Zero(m));
  auto sref = [&S, q](int a, int b) -> Vector& {
    return S[static_cast<std::size_t>(a) * (q + 1) + b];
  };
  for (int a = 0; a <= p; ++a) {
    for (int b = 0; b <= q; ++b) {
      if (a > 0 && b > 0) {
        sref(a, b) = sref(a - 1, b) + sref(a, b - 1) - sref(a - 1, b - 1) +
                     L.cell(a - 1, b - 1).transpose() * Y.node(a - 1, b - 1);
      }
      Y.node(a, b) = phi.node(a, b) + sref(a, b);
    }
  }
  return Y;
}

VectorSurface2D solve_volterra_2d_peano(const VectorSurface2D& phi,
                                        const MatrixMeasure2D& L) {
  if (phi.origin() != L.origin || phi.grid1() != L.grid1 || phi.grid2() != L.grid2 ||
      phi.dim() != L.dim) {
    throw std::invalid_argument("solve_volterra_2d_peano: phi and measure grids differ");
  }
  const int p = L.rows(), q = L.cols(), m = L.dim;
  VectorSurface2D Y(L.origin, L.grid1, L.grid2, m);
  for (int a = 0; a <= p; ++a) {
    for (int b = 0; b <= q; ++b) {
      Vector y = phi.node(a, b);
      for (int c = 0; c < a; ++c) {
        for (int d = 0; d < b; ++d) {
          // phi(u-) L(du) P((u, t], L) for the atom u at cell (c, d).
          const Matrix tail = peano_over(
              L,
              [&](int x, int y2) { return x > c && x < a && y2 > d && y2 < b; },
              0.0);
          y += tail.transpose() *
               (L.cell(c, d).transpose() * phi.node(c, d));
        }
      }
      Y.node(a, b) = y;
    }
  }
  return Y;
}

double volterra_residual(const VectorSurface2D& Y, const VectorSurface2D& phi,
                         const MatrixMeasure2D& L) {
  const int p = L.rows(), q = L.cols();
  double res = 0.0;
  for (int a = 0; a <= p; ++a) {
    for (int b = 0; b <= q; ++b) {
      Vector integral = Vector::Zero(L.dim);
      for (int c = 1; c <= a; ++c) {
        for (int d = 1; d <= b; ++d) {
          integral += L.cell(c - 1, d - 1).transpose() * Y.node(c - 1, d - 1);
        }
      }
      const Vector r = Y.node(a, b) - phi.node(a, b) - integral;
      res = std::max(res, r.cwiseAbs().maxCoeff());
    }
  }
  return res;
}

double duhamel_residual(const MatrixMeasure2D& A, const MatrixMeasure2D& B,
                        const TimeRect& rect) {
  check_common_grid(A, B);
  const CellRange r = align(A, rect);
  auto inside = [&r](int a, int b) {
    return a >= r.a0 && a < r.a1 && b >= r.b0 && b < r.b1;
  };
  const Matrix lhs = peano_over(A, inside, 0.0) - peano_over(B, inside, 0.0);

  Matrix rhs = Matrix::Zero(A.dim, A.dim);
  for (int a = r.a0; a < r.a1; ++a) {
    for (int b = r.b0; b < r.b1; ++b) {
      const Matrix diff = A.cell(a, b) - B.cell(a, b);
      if (diff.cwiseAbs().maxCoeff() == 0.0) continue;
      const Matrix before = peano_over(
          A, [&](int x, int y) { return inside(x, y) && x < a && y < b; }, 0.0);
      const Matrix after = peano_over(
          B, [&](int x, int y) { return inside(x, y) && x > a && y > b; }, 0.0);
      rhs += before * diff * after;
    }
  }
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

double variation_1d(const StepFunction1D& f) {
  return f.sup_abs() + f.total_variation();
}

double variation_2d(const StepSurface2D& f) {
  double vitali = 0.0;
  for (int a = 1; a <= static_cast<int>(f.grid1().size()); ++a) {
    for (int b = 1; b <= static_cast<int>(f.grid2().size()); ++b) {
      vitali += std::abs(f.cell_mass(a, b));
    }
  }
  const StepFunction1D section1(f.origin(), f.corner(), f.grid2(), f.boundary2());
  const StepFunction1D section2(f.origin(), f.corner(), f.grid1(), f.boundary1());
  return vitali + variation_1d(section1) + variation_1d(section2) - f.sup_abs();
}

std::pair<double, double> integral_bound_check(const StepSurface2D& f,
                                               const StepSurface2D& g) {
  if (f.origin() != g.origin() || f.grid1() != g.grid1() || f.grid2() != g.grid2()) {
    throw std::invalid_argument("integral_bound_check: surfaces must share grids");
  }
  double integral = 0.0;
  for (int a = 1; a <= static_cast<int>(g.grid1().size()); ++a) {
    for (int b = 1; b <= static_cast<int>(g.grid2().size()); ++b) {
      integral += f.node(a, b) * g.cell_mass(a, b);
    }
  }
  return {std::abs(integral), f.sup_abs() * variation_2d(g)};
}

}  // namespace lmstate
