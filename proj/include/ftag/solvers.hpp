#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "ftag/instance.hpp"
#include "ftag/wakeup_tree.hpp"

namespace ftag {

enum class SolveMode { Optimize, Decision };

enum class SolveStatus {
  Optimal,       // optimize: value proved minimum
  Feasible,      // heuristic: value achieved, optimality unknown
  Yes,           // decision: witness of makespan <= bound found
  No,            // decision: all schedules exceed the bound
  Inconclusive,  // budget exhausted before a definite answer
};

struct SolverStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t pruned_bound = 0;        // child wake time beyond bound/incumbent
  std::uint64_t pruned_lower_bound = 0;  // some frozen robot provably unreachable in time
  std::uint64_t pruned_symmetry = 0;     // colocated twin deferred to its lower index
  std::uint64_t complete_schedules = 0;  // full trees reached (exhaustive enumeration)
};

struct SolveOptions {
  std::optional<Rational> decision_bound;  // set => decision mode at this bound
  std::uint64_t node_budget = UINT64_MAX;
  std::optional<std::chrono::milliseconds> time_budget;
  bool symmetry_breaking = true;
};

struct SolveResult {
  SolveMode mode = SolveMode::Optimize;
  SolveStatus status = SolveStatus::Inconclusive;
  // Optimize: the proved optimum (or best incumbent when inconclusive).
  // Decision YES: the witness makespan; NO: the refuted bound.
  Rational optimum;
  std::optional<WakeupTree> tree;
  SolverStats stats;
};

// Reference oracle: enumerates every wake-up tree in chronological attachment
// order, no pruning, no symmetry breaking.  Refuses instances above the cap.
SolveResult solve_exhaustive(const FtpInstance& inst, std::size_t robot_cap = 7);

// Exact branch and bound over the same tree space.  Optimize mode starts from
// the greedy schedule as incumbent; decision mode stops at the first witness
// or refutes the bound exhaustively.  A blown budget yields Inconclusive,
// never a wrong answer.
SolveResult solve_branch_bound(const FtpInstance& inst, const SolveOptions& options = {});

// max over robots of dist(source, robot); no schedule can finish earlier.
Rational lower_bound_eccentricity(const FtpInstance& inst);

// Event-driven rational heuristic: every free robot claims the nearest
// unclaimed frozen robot (ties by target index, then by robot index); robots
// with no targets left stop.
SolveResult greedy_schedule(const FtpInstance& inst);

}  // namespace ftag
