#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ftag/instance.hpp"
#include "ftag/n3dm.hpp"
#include "ftag/wakeup_tree.hpp"

namespace ftag {

// Robot indices per family, in construction order.  The instance robot list is
// laid out as [roots, a, a_prime, b, b_prime, c], each block ordered by its
// 1-based family position.
struct GroupIndex {
  std::vector<std::size_t> roots, a, a_prime, b, b_prime, c;
};

// The freeze-tag instance built from an N3DM instance, together with the
// decision threshold and the construction parameters.
struct ReductionArtifacts {
  FtpInstance instance;
  Rational makespan_bound;  // the decision threshold: (2+n)*q
  Rational epsilon;         // per-row offset unit: 1/n
  Rational delta;           // c-row spacing: 2*(q - w_n)
  GroupIndex groups;
  std::size_t source = 0;
  N3dmInstance n3dm;  // the (possibly shifted) instance the artifacts encode
};

// One offending c robot, paired with the b robot of maximum x (the binding
// one); slack = c.x - b.x < 0.  Indices are 1-based family positions.
struct SoundnessViolation {
  std::size_t b_index;
  std::size_t c_index;
  Rational slack;

  friend bool operator==(const SoundnessViolation&, const SoundnessViolation&) = default;
};

// Geometric precondition report for the equal-makespan schedule.  sound
// requires every c robot weakly to the right of every b robot and all the
// construction's distance/monotonicity premises to hold; premise_failures is
// normally empty and lists any broken premise by name.
struct SoundnessReport {
  bool sound = false;
  std::vector<SoundnessViolation> violations;
  std::vector<std::string> premise_failures;
  Rational min_slack;  // min over all (b, c) pairs of c.x - b.x
  std::size_t min_b_index = 0, min_c_index = 0;  // 1-based argmin pair
};

ReductionArtifacts construct_reduction(const N3dmInstance& inst);

SoundnessReport layout_soundness(const ReductionArtifacts& art);

// Smallest k >= 0 such that the w-shifted instance has a sound layout.
std::int64_t required_shift(const N3dmInstance& inst);

// The equal-makespan schedule induced by a matching: each root chain-wakes the
// next root and dispatches toward one a robot per triple; a robots branch to
// their a' partner, b robots branch to the b' partner of the triple's a index.
// Every leaf arrives at exactly the makespan bound.  Refuses (ValidationError)
// on an unsound layout or an invalid matching, naming the violated premise.
WakeupTree canonical_schedule(const ReductionArtifacts& art, const Matching& m);

// Multiplies all coordinates by n (= 1/epsilon), yielding integer coordinates;
// the optimum scales by exactly the returned factor.
std::pair<FtpInstance, Rational> scale_to_integers(const ReductionArtifacts& art);

// Full rectangular unit grid spanning the bounding box of an
// integer-coordinate instance; grid shortest paths preserve L1 distances.
struct GridEmbedding {
  std::int64_t origin_x = 0, origin_y = 0;  // world coordinate of cell (0, 0)
  std::size_t width = 0, height = 0;
  std::vector<std::pair<std::size_t, std::size_t>> robot_cells;
};

GridEmbedding embed_grid(const FtpInstance& inst);

// BFS distances between robot cells; [i][j] in grid steps.
std::vector<std::vector<std::int64_t>> grid_all_pairs(const GridEmbedding& emb);

// Separates colocated robots: the t-th robot of a k-robot pile moves to
// offset (t*rho/k, 0), with the source always taking slot 0.  Refuses when two
// distinct piles are within 2*rho of each other.
FtpInstance perturb_unique(const FtpInstance& inst, const Rational& rho);

}  // namespace ftag
