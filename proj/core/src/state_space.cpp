#include "lmstate/state_space.hpp"

#include <stdexcept>
#include <unordered_set>

namespace lmstate {

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("StateSpace: label list must be nonempty");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("StateSpace: duplicate label '" + l + "'");
    }
  }
}

const std::string& StateSpace::label(int state) const {
  if (state < 0 || state >= size()) {
    throw std::out_of_range("StateSpace: state index out of range");
  }
  return labels_[static_cast<std::size_t>(state)];
}

int StateSpace::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  }
  return -1;
}

int StateSpace::index_of(const std::string& label) const {
  const int i = find(label);
  if (i < 0) {
    throw std::invalid_argument("StateSpace: unknown label '" + label + "'");
  }
  return i;
}

}  // namespace lmstate
