#include "lmstate/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lmstate {

StepFunction1D::StepFunction1D(double origin, double base_value,
                               std::vector<double> times, std::vector<double> values)
    : origin_(origin), base_(base_value), times_(std::move(times)), values_(std::move(values)) {
  if (times_.size() != values_.size()) {
    throw std::invalid_argument("StepFunction1D: times/values size mismatch");
  }
  double prev = origin_;
  for (double t : times_) {
    if (t <= prev) {
      throw std::invalid_argument(
          "StepFunction1D: grid must be sorted, distinct and > origin");
    }
    prev = t;
  }
}

double StepFunction1D::at(double t) const {
  if (t < origin_) {
    throw std::invalid_argument("StepFunction1D: evaluation before origin");
  }
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  if (it == times_.begin()) return base_;
  return values_[static_cast<std::size_t>(it - times_.begin()) - 1];
}

double StepFunction1D::left_limit(double t) const {
  if (t <= origin_) {
    throw std::invalid_argument("StepFunction1D: left limit at or before origin");
  }
  auto it = std::lower_bound(times_.begin(), times_.end(), t);
  if (it == times_.begin()) return base_;
  return values_[static_cast<std::size_t>(it - times_.begin()) - 1];
}

double StepFunction1D::increment(double t) const { return at(t) - left_limit(t); }

double StepFunction1D::sup_abs() const {
  double m = std::abs(base_);
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double StepFunction1D::total_variation() const {
  double tv = 0.0;
  double prev = base_;
  for (double v : values_) {
    tv += std::abs(v - prev);
    prev = v;
  }
  return tv;
}

}  // namespace lmstate
