#ifndef LMSTATE_PATH_PROCESSES_HPP
#define LMSTATE_PATH_PROCESSES_HPP

#include "lmstate/sample_path.hpp"
#include "lmstate/step_function.hpp"

namespace lmstate {

// N_ij(t): number of i->j jumps in (0, t], i != j. Nondecreasing,
// integer valued, N_ij(0) = 0.
StepFunction1D counting_process(const SamplePath& path, int i, int j, double horizon);

// N_ii(t) = -sum_{j != i} (N_ij(t) - N_ij(s)) for t > s, so that
// dN_ii = -sum_{j != i} dN_ij. Zero at t = s, nonincreasing.
StepFunction1D diagonal_counting(const SamplePath& path, int i, double s, double horizon);

// I_i(t) = 1{Z(t) = i}, cadlag.
StepFunction1D indicator_process(const SamplePath& path, int i, double horizon);

// Max absolute residual of I_i(t) - I_i(s) - sum_j [N_ji(t) - N_ji(s)]
// over all states i and all event times t in (s, horizon]; the diagonal
// term supplies the departures. Must be exactly zero on any valid path.
double verify_indicator_identity(const SamplePath& path, int n_states, double s,
                                 double horizon);

// N_{i1 j1}(t1) * N_{i2 j2}(t2), with t and R truncation when censored
// is set. Diagonal transition indices (i == j) expand bilinearly through
// the diagonal counting construction, which is why s is required.
double bivariate_product(const SamplePath& path, int i1, int j1, int i2, int j2,
                         double t1, double t2, double s, bool censored);

}  // namespace lmstate

#endif
