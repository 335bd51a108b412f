#include "lmstate/sample_path.hpp"

#include <stdexcept>

namespace lmstate {

SamplePath::SamplePath(std::string id, int initial_state, std::vector<Jump> jumps,
                       double censor_time, std::string landmark)
    : id_(std::move(id)),
      initial_state_(initial_state),
      jumps_(std::move(jumps)),
      censor_time_(censor_time),
      landmark_(std::move(landmark)) {
  if (initial_state_ < 0) {
    throw std::invalid_argument("SamplePath " + id_ + ": negative initial state");
  }
  int prev_state = initial_state_;
  double prev_time = 0.0;
  bool first = true;
  for (const Jump& j : jumps_) {
    if (j.time <= 0.0) {
      throw std::invalid_argument("SamplePath " + id_ + ": jump time must be > 0");
    }
    if (!first && j.time <= prev_time) {
      throw std::invalid_argument("SamplePath " + id_ +
                                  ": jump times must be strictly increasing");
    }
    if (j.from == j.to) {
      throw std::invalid_argument("SamplePath " + id_ + ": self-jump rejected");
    }
    if (j.from != prev_state) {
      throw std::invalid_argument("SamplePath " + id_ +
                                  ": jump source does not chain with previous state");
    }
    prev_state = j.to;
    prev_time = j.time;
    first = false;
  }
}

int SamplePath::state_at(double t) const {
  int state = initial_state_;
  for (const Jump& j : jumps_) {
    if (j.time > t) break;
    state = j.to;
  }
  return state;
}

int SamplePath::state_before(double t) const {
  int state = initial_state_;
  for (const Jump& j : jumps_) {
    if (j.time >= t) break;
    state = j.to;
  }
  return state;
}

SamplePath SamplePath::with_censoring(double censor_time) const {
  return SamplePath(id_, initial_state_, jumps_, censor_time, landmark_);
}

SamplePath SamplePath::with_landmark(std::string landmark) const {
  return SamplePath(id_, initial_state_, jumps_, censor_time_, std::move(landmark));
}

}  // namespace lmstate
