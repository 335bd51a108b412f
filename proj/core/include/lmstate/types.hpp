#ifndef LMSTATE_TYPES_HPP
#define LMSTATE_TYPES_HPP

#include <Eigen/Dense>
#include <limits>

namespace lmstate {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Layout of a state pair (i1, i2) inside the rearranged l^2 system:
// component index = l * i2 + i1 (column-by-column translation of the
// pair matrix, 0-based).
inline int pair_index(int i1, int i2, int n_states) {
  return n_states * i2 + i1;
}
inline int pair_first(int index, int n_states) { return index % n_states; }
inline int pair_second(int index, int n_states) { return index / n_states; }

}  // namespace lmstate

#endif
