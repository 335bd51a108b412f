#ifndef LMSTATE_STEP_FUNCTION_HPP
#define LMSTATE_STEP_FUNCTION_HPP

#include <vector>

namespace lmstate {

// Cadlag step function on [origin, inf): a base value on [origin, t_1)
// and one value per grid time (the value AT the grid time). Grid times
// are sorted, distinct and > origin.
class StepFunction1D {
 public:
  StepFunction1D() = default;
  StepFunction1D(double origin, double base_value, std::vector<double> times,
                 std::vector<double> values);

  static StepFunction1D constant(double origin, double value) {
    return StepFunction1D(origin, value, {}, {});
  }

  double origin() const { return origin_; }
  double base_value() const { return base_; }
  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& values() const { return values_; }

  // Value at t >= origin.
  double at(double t) const;
  // Left limit at t > origin: the value at the largest grid time < t,
  // or the base value when none exists.
  double left_limit(double t) const;
  // Jump at t: at(t) - left_limit(t).
  double increment(double t) const;

  double sup_abs() const;          // sup |f| over [origin, inf)
  double total_variation() const;  // sum of |jumps|

 private:
  double origin_ = 0.0;
  double base_ = 0.0;
  std::vector<double> times_;
  std::vector<double> values_;
};

}  // namespace lmstate

#endif
