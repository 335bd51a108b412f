#ifndef LMSTATE_STATE_SPACE_HPP
#define LMSTATE_STATE_SPACE_HPP

#include <string>
#include <vector>

namespace lmstate {

// Finite, ordered set of state labels. States are referred to by index
// everywhere else; the labels only matter for I/O.
class StateSpace {
 public:
  StateSpace() = default;
  explicit StateSpace(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int state) const;
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of a label, -1 if unknown.
  int find(const std::string& label) const;
  // Index of a label, throws on unknown labels.
  int index_of(const std::string& label) const;

  bool operator==(const StateSpace& other) const = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace lmstate

#endif
