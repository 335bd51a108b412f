#include "lmstate/path_processes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lmstate {

namespace {

// Raw count of i->j jumps in (0, t].
double count_jumps(const SamplePath& path, int i, int j, double t) {
  double c = 0.0;
  for (const Jump& u : path.jumps()) {
    if (u.time > t) break;
    if (u.from == i && u.to == j) c += 1.0;
  }
  return c;
}

// N_xy(t) for arbitrary index pair, diagonal expanded via the s-shifted
// departure sum. Optional censor truncation at R.
double counting_value(const SamplePath& path, int x, int y, double t, double s,
                      bool censored) {
  const double tt = censored ? std::min(t, path.censor_time()) : t;
  if (x != y) return count_jumps(path, x, y, tt);
  double v = 0.0;
  for (const Jump& u : path.jumps()) {
    if (u.from != x) continue;
    if (u.time > s && u.time <= tt) v -= 1.0;
  }
  return v;
}

}  // namespace

StepFunction1D counting_process(const SamplePath& path, int i, int j, double horizon) {
  if (i == j) {
    throw std::invalid_argument(
        "counting_process: diagonal index, use diagonal_counting");
  }
  std::vector<double> times, values;
  double c = 0.0;
  for (const Jump& u : path.jumps()) {
    if (u.time > horizon) break;
    if (u.from == i && u.to == j) {
      c += 1.0;
      times.push_back(u.time);
      values.push_back(c);
    }
  }
  return StepFunction1D(0.0, 0.0, std::move(times), std::move(values));
}

StepFunction1D diagonal_counting(const SamplePath& path, int i, double s, double horizon) {
  if (horizon <= s) {
    throw std::invalid_argument("diagonal_counting: horizon must exceed s");
  }
  std::vector<double> times, values;
  double c = 0.0;
  for (const Jump& u : path.jumps()) {
    if (u.time <= s) continue;
    if (u.time > horizon) break;
    if (u.from == i) {
      c -= 1.0;
      times.push_back(u.time);
      values.push_back(c);
    }
  }
  return StepFunction1D(s, 0.0, std::move(times), std::move(values));
}

StepFunction1D indicator_process(const SamplePath& path, int i, double horizon) {
  std::vector<double> times, values;
  double current = path.initial_state() == i ? 1.0 : 0.0;
  const double base = current;
  for (const Jump& u : path.jumps()) {
    if (u.time > horizon) break;
    const double v = u.to == i ? 1.0 : 0.0;
    if (v != current) {
      times.push_back(u.time);
      values.push_back(v);
      current = v;
    }
  }
  return StepFunction1D(0.0, base, std::move(times), std::move(values));
}

double verify_indicator_identity(const SamplePath& path, int n_states, double s,
                                 double horizon) {
  if (horizon <= s) {
    throw std::invalid_argument("verify_indicator_identity: horizon must exceed s");
  }
  std::vector<double> grid;
  for (const Jump& u : path.jumps()) {
    if (u.time > s && u.time <= horizon) grid.push_back(u.time);
  }
  grid.push_back(horizon);

  double residual = 0.0;
  for (int i = 0; i < n_states; ++i) {
    const double is = path.state_at(s) == i ? 1.0 : 0.0;
    for (double t : grid) {
      double flow = 0.0;
      for (int j = 0; j < n_states; ++j) {
        // N_ji(t) - N_ji(s); the diagonal contributes the departures.
        flow += counting_value(path, j, i, t, s, false) -
                (j == i ? 0.0 : counting_value(path, j, i, s, s, false));
      }
      const double it = path.state_at(t) == i ? 1.0 : 0.0;
      residual = std::max(residual, std::abs(it - is - flow));
    }
  }
  return residual;
}

double bivariate_product(const SamplePath& path, int i1, int j1, int i2, int j2,
                         double t1, double t2, double s, bool censored) {
  if (t1 <= s || t2 <= s) {
    throw std::invalid_argument("bivariate_product: times must exceed s");
  }
  return counting_value(path, i1, j1, t1, s, censored) *
         counting_value(path, i2, j2, t2, s, censored);
}

}  // namespace lmstate
