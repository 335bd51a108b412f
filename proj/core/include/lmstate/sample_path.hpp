#ifndef LMSTATE_SAMPLE_PATH_HPP
#define LMSTATE_SAMPLE_PATH_HPP

#include <string>
#include <vector>

#include "lmstate/types.hpp"

namespace lmstate {

struct Jump {
  double time = 0.0;  // > 0
  int from = -1;
  int to = -1;
};

// One individual's cadlag trajectory on a finite state space, together
// with its right-censoring time and landmark value. Immutable after
// construction; every derived process is a pure function of the path.
class SamplePath {
 public:
  // Validates: strictly increasing jump times > 0, from != to, and
  // chained jumps (each `from` equals the previous `to`).
  SamplePath(std::string id, int initial_state, std::vector<Jump> jumps,
             double censor_time = kInf, std::string landmark = "");

  const std::string& id() const { return id_; }
  int initial_state() const { return initial_state_; }
  const std::vector<Jump>& jumps() const { return jumps_; }
  double censor_time() const { return censor_time_; }
  const std::string& landmark() const { return landmark_; }

  // State occupied at time t (cadlag: the value at a jump time is the
  // post-jump state).
  int state_at(double t) const;
  // State just before t.
  int state_before(double t) const;

  // A jump is observable when it happens no later than the censoring time.
  bool observed(const Jump& j) const { return j.time <= censor_time_; }

  // Copies with one field replaced; used by the cohort transformers.
  SamplePath with_censoring(double censor_time) const;
  SamplePath with_landmark(std::string landmark) const;

 private:
  std::string id_;
  int initial_state_;
  std::vector<Jump> jumps_;
  double censor_time_;
  std::string landmark_;
};

}  // namespace lmstate

#endif
