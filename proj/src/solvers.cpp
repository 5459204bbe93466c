#include "ftag/solvers.hpp"

#include <algorithm>
#include <queue>
#include <tuple>
#include <vector>

namespace ftag {

namespace {

// Grows wake-up trees by attaching one frozen robot at a time, in
// nondecreasing (wake time, robot index) order.  That order generates every
// tree exactly once (trees whose zero-weight edges run from a higher to a
// lower index are covered by their relabeled isomorph) and makes the partial
// makespan monotone, so bound pruning is safe.
struct SearchEngine {
  const FtpInstance& inst;
  const DistanceMatrix& dist;
  std::size_t n;

  bool prune = true;
  bool symmetry = true;
  bool decision = false;
  Rational bound;  // decision threshold, valid when decision
  std::uint64_t node_budget = UINT64_MAX;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  std::vector<std::optional<std::size_t>> parent;
  std::vector<Rational> wake;
  std::vector<char> woken;
  std::vector<int> caps;
  std::size_t woken_count = 0;

  std::optional<Rational> best;
  std::optional<WakeupTree> best_tree;
  bool found = false;
  bool aborted = false;
  SolverStats stats;

  // twins[g]: robots below g at distance zero from it
  std::vector<std::vector<std::size_t>> twins;

  SearchEngine(const FtpInstance& instance, const DistanceMatrix& matrix)
      : inst(instance), dist(matrix), n(instance.size()) {
    parent.assign(n, std::nullopt);
    wake.assign(n, Rational{});
    woken.assign(n, 0);
    caps.assign(n, 0);
    woken[inst.source] = 1;
    caps[inst.source] = 1;
    woken_count = 1;
    twins.resize(n);
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < g; ++h)
        if (dist[g][h].is_zero()) twins[g].push_back(h);
  }

  bool over_budget() {
    if (stats.nodes_explored > node_budget) return true;
    if (deadline && (stats.nodes_explored & 1023u) == 0 &&
        std::chrono::steady_clock::now() > *deadline)
      return true;
    return false;
  }

  bool cut_value(const Rational& w) const {
    if (decision) return w > bound;
    return best && w >= *best;  // optimize: only strictly better completions matter
  }

  // Optimistic completion check: every frozen robot must still be reachable
  // within the bound from some woken node with a free dispatch slot.  Under
  // the triangle inequality relaying through frozen robots never beats the
  // direct hop, so the single-hop minimum is the exact relaxation.
  bool completion_feasible() const {
    for (std::size_t h = 0; h < n; ++h) {
      if (woken[h]) continue;
      bool reachable = false;
      for (std::size_t f = 0; f < n && !reachable; ++f)
        if (woken[f] && caps[f] > 0 && !cut_value(wake[f] + dist[f][h])) reachable = true;
      if (!reachable) return false;
    }
    return true;
  }

  void record_complete(const Rational& makespan) {
    if (decision) {
      best = makespan;
      best_tree = WakeupTree{parent};
      found = true;
    } else if (!best || makespan < *best) {
      best = makespan;
      best_tree = WakeupTree{parent};
    }
  }

  void search(const Rational& last_wake, std::size_t last_child, const Rational& makespan) {
    ++stats.nodes_explored;
    if (over_budget()) {
      aborted = true;
      return;
    }
    if (woken_count == n) {
      record_complete(makespan);
      return;
    }

    struct Candidate {
      Rational w;
      std::size_t g, f;
    };
    std::vector<Candidate> candidates;
    for (std::size_t g = 0; g < n; ++g) {
      if (woken[g]) continue;
      if (symmetry) {
        bool deferred = false;
        for (std::size_t h : twins[g])
          if (!woken[h]) {
            deferred = true;
            break;
          }
        if (deferred) {
          ++stats.pruned_symmetry;
          continue;
        }
      }
      for (std::size_t f = 0; f < n; ++f) {
        if (!woken[f] || caps[f] == 0) continue;
        Rational w = wake[f] + dist[f][g];
        if (w < last_wake || (w == last_wake && g < last_child)) continue;
        if (prune && cut_value(w)) {
          ++stats.pruned_bound;
          continue;
        }
        candidates.push_back({std::move(w), g, f});
      }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      return std::tie(a.w, a.g, a.f) < std::tie(b.w, b.g, b.f);
    });

    for (const Candidate& c : candidates) {
      if (prune && cut_value(c.w)) {  // incumbent may have improved mid-loop
        ++stats.pruned_bound;
        continue;
      }
      parent[c.g] = c.f;
      wake[c.g] = c.w;
      woken[c.g] = 1;
      caps[c.g] = 2;
      --caps[c.f];
      ++woken_count;

      if (!prune || completion_feasible()) {
        search(c.w, c.g, max(makespan, c.w));
      } else {
        ++stats.pruned_lower_bound;
      }

      --woken_count;
      ++caps[c.f];
      caps[c.g] = 0;
      woken[c.g] = 0;
      parent[c.g] = std::nullopt;
      if (found || aborted) return;
    }
  }
};

SolveResult run_engine(SearchEngine& engine, SolveMode mode) {
  engine.search(Rational{-1}, 0, Rational{0});

  SolveResult result;
  result.mode = mode;
  result.stats = engine.stats;
  if (mode == SolveMode::Decision) {
    if (engine.found) {
      result.status = SolveStatus::Yes;
      result.optimum = *engine.best;
      result.tree = std::move(engine.best_tree);
    } else if (engine.aborted) {
      result.status = SolveStatus::Inconclusive;
      result.optimum = engine.bound;
    } else {
      result.status = SolveStatus::No;
      result.optimum = engine.bound;
    }
  } else {
    result.status = engine.aborted ? SolveStatus::Inconclusive : SolveStatus::Optimal;
    result.optimum = *engine.best;  // incumbent; exact when not aborted
    result.tree = std::move(engine.best_tree);
  }
  return result;
}

}  // namespace

namespace {

// Reference enumeration, deliberately kept separate from SearchEngine so the
// two exact solvers remain independent cross-checks of each other.  Grows
// trees chronologically: repeatedly picks a woken node with a free dispatch
// slot and a frozen robot, subject to nondecreasing (wake, robot) keys, which
// realizes every tree exactly once.
struct ExhaustiveEnumeration {
  const FtpInstance& inst;
  const DistanceMatrix dist;
  std::size_t n;

  std::vector<std::optional<std::size_t>> parent;
  std::vector<Rational> wake;
  std::vector<char> woken;
  std::vector<int> slots;
  std::size_t woken_count = 1;

  std::optional<Rational> best;
  WakeupTree best_tree;
  SolverStats stats;

  explicit ExhaustiveEnumeration(const FtpInstance& instance)
      : inst(instance),
        dist(build_distance_matrix(instance)),
        n(instance.size()),
        parent(n),
        wake(n),
        woken(n, 0),
        slots(n, 0) {
    woken[inst.source] = 1;
    slots[inst.source] = 1;
  }

  void grow(const Rational& key_time, std::size_t key_robot, const Rational& makespan) {
    ++stats.nodes_explored;
    if (woken_count == n) {
      ++stats.complete_schedules;
      if (!best || makespan < *best) {
        best = makespan;
        best_tree = WakeupTree{parent};
      }
      return;
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (woken[g]) continue;
      for (std::size_t f = 0; f < n; ++f) {
        if (!woken[f] || slots[f] == 0) continue;
        const Rational arrive = wake[f] + dist[f][g];
        if (arrive < key_time || (arrive == key_time && g < key_robot)) continue;
        parent[g] = f;
        wake[g] = arrive;
        woken[g] = 1;
        slots[g] = 2;
        --slots[f];
        ++woken_count;
        grow(arrive, g, max(makespan, arrive));
        --woken_count;
        ++slots[f];
        slots[g] = 0;
        woken[g] = 0;
        parent[g] = std::nullopt;
      }
    }
  }
};

}  // namespace

SolveResult solve_exhaustive(const FtpInstance& inst, std::size_t robot_cap) {
  validate_instance(inst);
  if (inst.size() > robot_cap)
    throw CapExceededError("exhaustive solver: " + std::to_string(inst.size()) +
                           " robots exceed the enumeration cap of " + std::to_string(robot_cap) +
                           "; use the branch-and-bound solver instead");
  ExhaustiveEnumeration search(inst);
  search.grow(Rational{-1}, 0, Rational{0});
  SolveResult result;
  result.mode = SolveMode::Optimize;
  result.status = SolveStatus::Optimal;
  result.optimum = *search.best;
  result.tree = std::move(search.best_tree);
  result.stats = search.stats;
  return result;
}

SolveResult solve_branch_bound(const FtpInstance& inst, const SolveOptions& options) {
  validate_instance(inst);
  const DistanceMatrix dist = build_distance_matrix(inst);

  if (options.decision_bound) {
    SolveResult result;
    result.mode = SolveMode::Decision;
    result.optimum = *options.decision_bound;
    // nothing beats the farthest robot's distance; refute without searching
    if (*options.decision_bound < lower_bound_eccentricity(inst)) {
      result.status = SolveStatus::No;
      return result;
    }
    SearchEngine engine(inst, dist);
    engine.decision = true;
    engine.bound = *options.decision_bound;
    engine.symmetry = options.symmetry_breaking;
    engine.node_budget = options.node_budget;
    if (options.time_budget)
      engine.deadline = std::chrono::steady_clock::now() + *options.time_budget;
    return run_engine(engine, SolveMode::Decision);
  }

  SolveResult warm = greedy_schedule(inst);
  SearchEngine engine(inst, dist);
  engine.symmetry = options.symmetry_breaking;
  engine.node_budget = options.node_budget;
  if (options.time_budget)
    engine.deadline = std::chrono::steady_clock::now() + *options.time_budget;
  engine.best = warm.optimum;
  engine.best_tree = std::move(warm.tree);
  return run_engine(engine, SolveMode::Optimize);
}

Rational lower_bound_eccentricity(const FtpInstance& inst) {
  validate_instance(inst);
  Rational ecc;
  for (std::size_t i = 0; i < inst.size(); ++i)
    ecc = max(ecc, inst.distance(inst.source, i));
  return ecc;
}

SolveResult greedy_schedule(const FtpInstance& inst) {
  validate_instance(inst);
  const DistanceMatrix dist = build_distance_matrix(inst);
  const std::size_t n = inst.size();

  std::vector<std::optional<std::size_t>> parent(n);
  std::vector<Rational> arrival(n);
  std::vector<char> claimed(n, 0);
  claimed[inst.source] = 1;

  using Event = std::tuple<Rational, std::size_t, std::size_t>;  // (free time, robot, at node)
  std::priority_queue<Event, std::vector<Event>, std::greater<Event>> queue;
  queue.push({Rational{0}, inst.source, inst.source});

  Rational makespan;
  SolverStats stats;
  while (!queue.empty()) {
    const auto [now, robot, at] = queue.top();
    queue.pop();
    ++stats.nodes_explored;

    std::optional<std::size_t> target;
    for (std::size_t g = 0; g < n; ++g) {
      if (claimed[g]) continue;
      if (!target || dist[at][g] < dist[at][*target]) target = g;
    }
    if (!target) continue;  // no unclaimed frozen robots left: stop

    claimed[*target] = 1;
    parent[*target] = at;
    arrival[*target] = now + dist[at][*target];
    makespan = max(makespan, arrival[*target]);
    queue.push({arrival[*target], robot, *target});    // the waker moves on
    queue.push({arrival[*target], *target, *target});  // the woken robot is free
  }

  SolveResult result;
  result.mode = SolveMode::Optimize;
  result.status = SolveStatus::Feasible;
  result.optimum = makespan;
  result.tree = WakeupTree{std::move(parent)};
  result.stats = stats;
  return result;
}

}  // namespace ftag
