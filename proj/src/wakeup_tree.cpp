#include "ftag/wakeup_tree.hpp"

namespace ftag {

std::vector<std::vector<std::size_t>> children_of(const WakeupTree& tree) {
  std::vector<std::vector<std::size_t>> children(tree.size());
  for (std::size_t i = 0; i < tree.size(); ++i)
    if (tree.parent[i] && *tree.parent[i] < tree.size()) children[*tree.parent[i]].push_back(i);
  return children;  // ascending child index by construction
}

std::vector<TreeViolation> validate_tree(const WakeupTree& tree, const FtpInstance& inst,
                                         const std::optional<Rational>& bound) {
  std::vector<TreeViolation> out;
  const std::size_t n = inst.size();
  if (tree.size() != n) {
    out.push_back({0, "tree has " + std::to_string(tree.size()) + " nodes, instance has " +
                          std::to_string(n)});
    return out;
  }

  if (tree.parent[inst.source])
    out.push_back({inst.source, "source must not have a parent"});
  for (std::size_t i = 0; i < n; ++i) {
    if (i == inst.source) continue;
    if (!tree.parent[i]) {
      out.push_back({i, "missing parent"});
    } else if (*tree.parent[i] >= n) {
      out.push_back({i, "parent index out of range"});
    } else if (*tree.parent[i] == i) {
      out.push_back({i, "node is its own parent"});
    }
  }
  if (!out.empty()) return out;

  // Every parent chain must reach the source without revisiting a node.
  // 0 = unknown, 1 = on current chain, 2 = reaches source.
  std::vector<unsigned char> state(n, 0);
  state[inst.source] = 2;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> chain;
    std::size_t v = i;
    while (state[v] == 0) {
      state[v] = 1;
      chain.push_back(v);
      v = *tree.parent[v];
    }
    if (state[v] == 1) {
      out.push_back({v, "parent cycle"});
      return out;
    }
    for (std::size_t c : chain) state[c] = 2;
  }

  const auto children = children_of(tree);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t deg = children[i].size();
    if (i == inst.source) {
      if (deg > 1) out.push_back({i, "root out-degree > 1"});
      if (n >= 2 && deg == 0) out.push_back({i, "root must dispatch exactly one robot"});
    } else if (deg > 2) {
      out.push_back({i, "out-degree > 2"});
    }
  }
  if (!out.empty() || !bound) return out;

  // Structure is sound; arrival times are well defined.
  std::vector<Rational> arrival(n);
  std::vector<std::size_t> order{inst.source};
  order.reserve(n);
  std::size_t worst = inst.source;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t v = order[head];
    for (std::size_t c : children[v]) {
      arrival[c] = arrival[v] + inst.distance(v, c);
      if (arrival[c] > arrival[worst]) worst = c;
      order.push_back(c);
    }
  }
  if (arrival[worst] > *bound)
    out.push_back({worst, "makespan " + arrival[worst].str() + " exceeds bound " + bound->str()});
  return out;
}

ScheduleEvaluation evaluate_tree(const WakeupTree& tree, const FtpInstance& inst) {
  const auto violations = validate_tree(tree, inst);
  if (!violations.empty())
    throw ValidationError("invalid wake-up tree: node " + std::to_string(violations[0].node) +
                          ": " + violations[0].reason);

  const std::size_t n = inst.size();
  const auto children = children_of(tree);
  ScheduleEvaluation eval;
  eval.arrival.assign(n, Rational{});
  std::vector<std::size_t> order{inst.source};
  order.reserve(n);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t v = order[head];
    for (std::size_t c : children[v]) {
      eval.arrival[c] = eval.arrival[v] + inst.distance(v, c);
      eval.makespan = max(eval.makespan, eval.arrival[c]);
      order.push_back(c);
    }
  }
  return eval;
}

}  // namespace ftag
