#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "ftag/n3dm.hpp"
#include "ftag/reduction.hpp"
#include "ftag/solvers.hpp"

namespace ftag {

enum class ShiftPolicy { Auto, Off, Fixed };

struct VerifyOptions {
  ShiftPolicy shift = ShiftPolicy::Auto;
  std::int64_t fixed_shift = 0;
  std::uint64_t node_budget = UINT64_MAX;
  std::optional<std::chrono::milliseconds> time_budget;
  std::size_t n3dm_cap = 10;
};

enum class DecisionOutcome { Yes, No, Inconclusive };

// End-to-end equivalence check: the N3DM oracle answer against the exact
// freeze-tag decision at the construction's makespan bound.  On YES the
// optimum is pinned to the bound exactly (the a' robots force it from below,
// the witness from above); on NO only "above the bound" is certified.
struct VerificationReport {
  bool n3dm_yes = false;
  std::int64_t shift_used = 0;
  Rational makespan_bound;
  bool layout_sound = false;
  std::optional<Rational> canonical_makespan;  // yes-instances with a sound layout
  DecisionOutcome ftp_decision = DecisionOutcome::Inconclusive;
  std::optional<Rational> ftp_optimum;  // set iff ftp_decision == Yes
  bool conclusive = false;
  bool equivalence_holds = false;  // meaningful only when conclusive
  SolverStats solver_stats;
  double n3dm_millis = 0.0;
  double solver_millis = 0.0;
};

VerificationReport verify_reduction(const N3dmInstance& inst, const VerifyOptions& options = {});

}  // namespace ftag
