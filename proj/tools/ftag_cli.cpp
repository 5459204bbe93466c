// Command-line front end: freeze-tag instances, exact and greedy solving,
// N3DM reductions and the end-to-end equivalence verifier.  All documents are
// JSON (see README); decision answers print as a single YES/NO line.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ftag/io.hpp"
#include "ftag/render.hpp"
#include "ftag/solvers.hpp"
#include "ftag/verify.hpp"

namespace {

using ftag::Json;
using ftag::Rational;

constexpr int kExitError = 1;         // bad usage, unreadable input, invalid document
constexpr int kExitVerifyFailed = 2;  // verification found violations / equivalence fails
constexpr int kExitInconclusive = 3;  // solver budget exhausted before an answer

Json load(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)),
                     std::istreambuf_iterator<char>());
    return ftag::parse_json_text(text);
  }
  return ftag::load_json_file(path);
}

void emit(const Json& doc, const std::string& out_path) {
  if (out_path.empty() || out_path == "-")
    std::cout << doc.dump(2) << '\n';
  else
    ftag::save_json_file(out_path, doc);
}

ftag::ShiftPolicy parse_shift(const std::string& text, std::int64_t& fixed) {
  if (text == "auto") return ftag::ShiftPolicy::Auto;
  if (text == "off") return ftag::ShiftPolicy::Off;
  fixed = std::stoll(text);
  if (fixed < 0) throw CLI::ValidationError("--shift", "shift must be auto, off or k >= 0");
  return ftag::ShiftPolicy::Fixed;
}

Json stats_json(const ftag::SolverStats& stats) {
  Json doc;
  doc["nodes_explored"] = stats.nodes_explored;
  doc["pruned_bound"] = stats.pruned_bound;
  doc["pruned_lower_bound"] = stats.pruned_lower_bound;
  doc["pruned_symmetry"] = stats.pruned_symmetry;
  return doc;
}

struct ShiftedReduction {
  ftag::ReductionArtifacts art;
  std::int64_t shift_used = 0;
};

ShiftedReduction build_reduction(const Json& doc, const std::string& shift_text) {
  const auto inst = ftag::n3dm_from_json(doc);
  std::int64_t fixed = 0;
  const auto policy = parse_shift(shift_text, fixed);
  std::int64_t k = 0;
  switch (policy) {
    case ftag::ShiftPolicy::Auto: k = ftag::required_shift(inst); break;
    case ftag::ShiftPolicy::Fixed: k = fixed; break;
    case ftag::ShiftPolicy::Off: k = 0; break;
  }
  return {ftag::construct_reduction(ftag::shift_w(inst, k)), k};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"freeze-tag scheduling toolkit: exact L1-plane solvers and the "
               "numerical-matching reduction pipeline"};
  app.require_subcommand(1);

  std::string in_path, out_path, meta_path, schedule_path, shift_text = "auto", bound_text,
              rho_text;
  std::uint64_t node_budget = UINT64_MAX;
  std::int64_t time_budget_ms = 0;
  bool use_greedy = false, no_symmetry = false, check_grid = false, print_stats = false;

  auto* reduce = app.add_subcommand("reduce", "build a freeze-tag instance from an N3DM document");
  reduce->add_option("input", in_path, "N3DM JSON document ('-' for stdin)")->required();
  reduce->add_option("-o,--out", out_path, "instance output path (default stdout)");
  reduce->add_option("--meta", meta_path, "also write the metadata sidecar here");
  reduce->add_option("--shift", shift_text, "w-shift: auto, off or an integer k (default auto)");

  bool use_exact = false;
  auto* solve = app.add_subcommand("solve", "solve a freeze-tag instance");
  solve->add_option("input", in_path, "instance JSON document ('-' for stdin)")->required();
  solve->add_flag("--exact", use_exact, "exact branch-and-bound search (the default)");
  solve->add_flag("--greedy", use_greedy, "use the greedy heuristic instead of exact search");
  solve->add_option("--decision", bound_text, "answer the decision question at this bound (p/q)");
  solve->add_option("-o,--out", out_path, "write the schedule document here");
  solve->add_option("--node-budget", node_budget, "abort after this many search nodes");
  solve->add_option("--time-budget-ms", time_budget_ms, "abort after this many milliseconds");
  solve->add_flag("--no-symmetry", no_symmetry, "disable identical-position symmetry breaking");
  solve->add_flag("--stats", print_stats, "print solver statistics to stderr");

  auto* verify_schedule =
      app.add_subcommand("verify-schedule", "check a schedule document against an instance");
  verify_schedule->add_option("instance", in_path, "instance JSON document")->required();
  verify_schedule->add_option("schedule", schedule_path, "schedule JSON document")->required();
  verify_schedule->add_option("--bound", bound_text, "also require makespan <= this bound");

  auto* n3dm_solve = app.add_subcommand("n3dm-solve", "decide an N3DM instance by backtracking");
  n3dm_solve->add_option("input", in_path, "N3DM JSON document")->required();
  n3dm_solve->add_option("-o,--out", out_path, "write the witness matching here");

  auto* verify_reduction_cmd = app.add_subcommand(
      "verify-reduction", "run the full equivalence pipeline and emit a report");
  verify_reduction_cmd->add_option("input", in_path, "N3DM JSON document")->required();
  verify_reduction_cmd->add_option("-o,--out", out_path, "report output path (default stdout)");
  verify_reduction_cmd->add_option("--shift", shift_text,
                                   "w-shift: auto, off or an integer k (default auto)");
  verify_reduction_cmd->add_option("--node-budget", node_budget,
                                   "abort the solver after this many search nodes");
  verify_reduction_cmd->add_option("--time-budget-ms", time_budget_ms,
                                   "abort the solver after this many milliseconds");

  auto* scale = app.add_subcommand(
      "scale", "build the reduction and scale all coordinates to integers");
  scale->add_option("input", in_path, "N3DM JSON document")->required();
  scale->add_option("-o,--out", out_path, "scaled instance output path (default stdout)");
  scale->add_option("--shift", shift_text, "w-shift: auto, off or an integer k (default auto)");

  auto* embed = app.add_subcommand("embed-grid",
                                   "embed an integer-coordinate instance into a unit grid");
  embed->add_option("input", in_path, "instance JSON document")->required();
  embed->add_option("-o,--out", out_path, "grid output path (default stdout)");
  embed->add_flag("--check", check_grid, "verify grid BFS distances against the L1 matrix");

  auto* perturb =
      app.add_subcommand("perturb", "separate colocated robots inside small disks");
  perturb->add_option("input", in_path, "instance JSON document")->required();
  perturb->add_option("--rho", rho_text, "perturbation radius (p/q)")->required();
  perturb->add_option("-o,--out", out_path, "perturbed instance output path (default stdout)");

  auto* render = app.add_subcommand("render", "draw an instance (and schedule) as SVG");
  render->add_option("input", in_path, "instance JSON document")->required();
  render->add_option("-o,--out", out_path, "SVG output path")->required();
  render->add_option("--schedule", schedule_path, "overlay this schedule document");
  render->add_option("--meta", meta_path, "color robots by the reduction groups in this sidecar");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reduce) {
      const auto [art, shift_used] = build_reduction(load(in_path), shift_text);
      emit(ftag::instance_to_json(art.instance), out_path);
      if (!meta_path.empty())
        ftag::save_json_file(meta_path, ftag::metadata_to_json(art, shift_used));
      return 0;
    }

    if (*solve) {
      const auto inst = ftag::instance_from_json(load(in_path));
      if (use_exact && use_greedy)
        throw CLI::ValidationError("--greedy", "choose either --exact or --greedy");
      ftag::SolveResult result;
      if (use_greedy) {
        if (!bound_text.empty())
          throw CLI::ValidationError("--decision", "decision mode requires the exact solver");
        result = ftag::greedy_schedule(inst);
      } else {
        ftag::SolveOptions options;
        options.node_budget = node_budget;
        options.symmetry_breaking = !no_symmetry;
        if (time_budget_ms > 0)
          options.time_budget = std::chrono::milliseconds(time_budget_ms);
        if (!bound_text.empty()) options.decision_bound = Rational::parse(bound_text);
        result = ftag::solve_branch_bound(inst, options);
      }
      if (print_stats) std::cerr << stats_json(result.stats).dump(2) << '\n';
      if (result.mode == ftag::SolveMode::Decision) {
        switch (result.status) {
          case ftag::SolveStatus::Yes: std::cout << "YES\n"; break;
          case ftag::SolveStatus::No: std::cout << "NO\n"; break;
          default: std::cout << "INCONCLUSIVE\n"; return kExitInconclusive;
        }
        if (result.tree && !out_path.empty())
          ftag::save_json_file(out_path, ftag::schedule_to_json(*result.tree));
        return 0;
      }
      if (result.status == ftag::SolveStatus::Inconclusive) {
        std::cout << "inconclusive (best upper bound " << result.optimum.str() << ")\n";
        return kExitInconclusive;
      }
      std::cout << (use_greedy ? "makespan " : "optimum ") << result.optimum.str() << '\n';
      if (result.tree && !out_path.empty())
        ftag::save_json_file(out_path, ftag::schedule_to_json(*result.tree));
      return 0;
    }

    if (*verify_schedule) {
      const auto inst = ftag::instance_from_json(load(in_path));
      const auto tree = ftag::schedule_from_json(load(schedule_path));
      std::optional<Rational> bound;
      if (!bound_text.empty()) bound = Rational::parse(bound_text);
      const auto violations = ftag::validate_tree(tree, inst, bound);
      if (violations.empty()) {
        const auto eval = ftag::evaluate_tree(tree, inst);
        std::cout << "ok makespan " << eval.makespan.str() << '\n';
        return 0;
      }
      for (const auto& v : violations)
        std::cout << "violation node " << v.node << ": " << v.reason << '\n';
      return kExitVerifyFailed;
    }

    if (*n3dm_solve) {
      const auto inst = ftag::n3dm_from_json(load(in_path));
      const auto matching = ftag::brute_force_match(inst);
      std::cout << (matching ? "YES\n" : "NO\n");
      if (matching && !out_path.empty())
        ftag::save_json_file(out_path, ftag::matching_to_json(inst, *matching));
      return 0;
    }

    if (*verify_reduction_cmd) {
      const auto inst = ftag::n3dm_from_json(load(in_path));
      ftag::VerifyOptions options;
      options.shift = parse_shift(shift_text, options.fixed_shift);
      options.node_budget = node_budget;
      if (time_budget_ms > 0) options.time_budget = std::chrono::milliseconds(time_budget_ms);
      const auto report = ftag::verify_reduction(inst, options);
      emit(ftag::report_to_json(report), out_path);
      if (!report.conclusive) return kExitInconclusive;
      return report.equivalence_holds ? 0 : kExitVerifyFailed;
    }

    if (*scale) {
      const auto [art, shift_used] = build_reduction(load(in_path), shift_text);
      (void)shift_used;
      const auto [scaled, factor] = ftag::scale_to_integers(art);
      std::cerr << "scale " << factor.str() << ", threshold "
                << (art.makespan_bound * factor).str() << '\n';
      emit(ftag::instance_to_json(scaled), out_path);
      return 0;
    }

    if (*embed) {
      const auto inst = ftag::instance_from_json(load(in_path));
      const auto emb = ftag::embed_grid(inst);
      if (check_grid) {
        const auto grid = ftag::grid_all_pairs(emb);
        const auto l1 = ftag::build_distance_matrix(inst);
        for (std::size_t i = 0; i < inst.size(); ++i)
          for (std::size_t j = 0; j < inst.size(); ++j)
            if (Rational{grid[i][j]} != l1[i][j]) {
              std::cout << "mismatch at (" << i << "," << j << "): grid " << grid[i][j]
                        << " vs L1 " << l1[i][j].str() << '\n';
              return kExitVerifyFailed;
            }
        std::cout << "ok " << inst.size() << " robots, " << emb.width << "x" << emb.height
                  << " grid\n";
      }
      emit(ftag::grid_to_json(emb), out_path);
      return 0;
    }

    if (*perturb) {
      const auto inst = ftag::instance_from_json(load(in_path));
      const auto moved = ftag::perturb_unique(inst, Rational::parse(rho_text));
      emit(ftag::instance_to_json(moved), out_path);
      return 0;
    }

    if (*render) {
      const auto inst = ftag::instance_from_json(load(in_path));
      std::optional<ftag::WakeupTree> tree;
      if (!schedule_path.empty()) tree = ftag::schedule_from_json(load(schedule_path));
      std::optional<ftag::GroupIndex> groups;
      if (!meta_path.empty()) groups = ftag::metadata_from_json(load(meta_path)).groups;
      ftag::render_svg_file(out_path, inst, tree ? &*tree : nullptr,
                            groups ? &*groups : nullptr);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
