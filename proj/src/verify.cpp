#include "ftag/verify.hpp"

namespace ftag {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point from) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
      .count();
}

}  // namespace

VerificationReport verify_reduction(const N3dmInstance& inst, const VerifyOptions& options) {
  VerificationReport report;

  auto t0 = std::chrono::steady_clock::now();
  const auto matching = brute_force_match(inst, options.n3dm_cap);
  report.n3dm_millis = elapsed_ms(t0);
  report.n3dm_yes = matching.has_value();

  switch (options.shift) {
    case ShiftPolicy::Auto:
      report.shift_used = required_shift(inst);
      break;
    case ShiftPolicy::Fixed:
      report.shift_used = options.fixed_shift;
      break;
    case ShiftPolicy::Off:
      report.shift_used = 0;
      break;
  }
  const N3dmInstance shifted = shift_w(inst, report.shift_used);
  const ReductionArtifacts art = construct_reduction(shifted);
  report.makespan_bound = art.makespan_bound;
  report.layout_sound = layout_soundness(art).sound;

  // A shift adds the same constant to every triple sum, so the matching's
  // index triples stay valid for the shifted instance.
  if (matching && report.layout_sound) {
    const WakeupTree canonical = canonical_schedule(art, *matching);
    report.canonical_makespan = evaluate_tree(canonical, art.instance).makespan;
  }

  SolveOptions solve_options;
  solve_options.decision_bound = art.makespan_bound;
  solve_options.node_budget = options.node_budget;
  solve_options.time_budget = options.time_budget;
  t0 = std::chrono::steady_clock::now();
  const SolveResult decision = solve_branch_bound(art.instance, solve_options);
  report.solver_millis = elapsed_ms(t0);
  report.solver_stats = decision.stats;

  switch (decision.status) {
    case SolveStatus::Yes:
      report.ftp_decision = DecisionOutcome::Yes;
      // every a' robot sits at exactly the bound from the source, so a witness
      // at the bound pins the optimum
      report.ftp_optimum = art.makespan_bound;
      break;
    case SolveStatus::No:
      report.ftp_decision = DecisionOutcome::No;
      break;
    default:
      report.ftp_decision = DecisionOutcome::Inconclusive;
      break;
  }
  report.conclusive = report.ftp_decision != DecisionOutcome::Inconclusive;
  report.equivalence_holds =
      report.conclusive && (report.n3dm_yes == (report.ftp_decision == DecisionOutcome::Yes));
  return report;
}

}  // namespace ftag
