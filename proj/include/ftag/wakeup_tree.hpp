#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ftag/instance.hpp"

namespace ftag {

// Activation schedule as a rooted tree over robot indices: parent[i] is the
// node whose wake event dispatched a robot to i; the source has no parent.
// The root has out-degree 1 (0 for a single-robot instance); every other node
// has out-degree at most 2.
struct WakeupTree {
  std::vector<std::optional<std::size_t>> parent;

  std::size_t size() const { return parent.size(); }

  static WakeupTree single() { return WakeupTree{{std::nullopt}}; }
};

struct TreeViolation {
  std::size_t node;
  std::string reason;
};

struct ScheduleEvaluation {
  std::vector<Rational> arrival;  // arrival[source] == 0
  Rational makespan;              // max over robots
};

// Children of each node, ordered by child index.
std::vector<std::vector<std::size_t>> children_of(const WakeupTree& tree);

// Structural certificate check: spanning, acyclic, degree rules, and (when
// bound is given) makespan <= bound.  Violations name the offending node; an
// empty list means the tree is a valid schedule.
std::vector<TreeViolation> validate_tree(const WakeupTree& tree, const FtpInstance& inst,
                                         const std::optional<Rational>& bound = std::nullopt);

// Arrival times by root-path summation.  Throws ValidationError listing the
// first violation if the tree is not valid for the instance.
ScheduleEvaluation evaluate_tree(const WakeupTree& tree, const FtpInstance& inst);

}  // namespace ftag
