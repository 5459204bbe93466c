#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ftag/errors.hpp"
#include "ftag/geometry.hpp"

namespace ftag {

enum class Metric { L1Plane, ExplicitMatrix };

using DistanceMatrix = std::vector<std::vector<Rational>>;

// A freeze-tag instance: robot positions (a multiset, duplicates allowed), the
// index of the initially active robot, and the metric.  Explicit-matrix
// instances carry their own complete distance matrix; plane instances derive
// distances from coordinates.
struct FtpInstance {
  std::vector<Point2> robots;
  std::size_t source = 0;
  Metric metric = Metric::L1Plane;
  std::optional<DistanceMatrix> matrix;  // present iff metric == ExplicitMatrix

  std::size_t size() const { return robots.size(); }

  Rational distance(std::size_t i, std::size_t j) const {
    return metric == Metric::L1Plane ? l1_distance(robots[i], robots[j]) : (*matrix)[i][j];
  }
};

// Throws ValidationError naming the offending robot/entry/triple.
void validate_instance(const FtpInstance& inst);

// Full pairwise matrix under the instance metric.  Validates first, so an
// invalid explicit matrix is reported rather than copied through.
DistanceMatrix build_distance_matrix(const FtpInstance& inst);

}  // namespace ftag
