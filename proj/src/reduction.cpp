#include "ftag/reduction.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace ftag {

namespace {

std::string pair_str(std::size_t j, std::size_t k) {
  return "(" + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

ReductionArtifacts construct_reduction(const N3dmInstance& inst) {
  const std::size_t n = inst.size();
  const Rational q{inst.q};
  const Rational n_rat{static_cast<std::int64_t>(n)};

  ReductionArtifacts art;
  art.n3dm = inst;
  art.makespan_bound = (Rational{2} + n_rat) * q;
  art.epsilon = Rational{1} / n_rat;
  art.delta = Rational{2} * (q - Rational{inst.w.back()});
  art.source = 0;

  auto& robots = art.instance.robots;
  robots.reserve(6 * n);

  for (std::size_t i = 0; i < n; ++i) {
    art.groups.roots.push_back(robots.size());
    robots.push_back({Rational{0}, Rational{0}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rational off = Rational{static_cast<std::int64_t>(i + 1)} * art.epsilon;
    art.groups.a.push_back(robots.size());
    robots.push_back({Rational{inst.u[i]} - off, off});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rational off = Rational{static_cast<std::int64_t>(i + 1)} * art.epsilon;
    art.groups.a_prime.push_back(robots.size());
    robots.push_back({art.makespan_bound - off, off});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rational off = Rational{static_cast<std::int64_t>(i + 1)} * art.epsilon;
    art.groups.b.push_back(robots.size());
    robots.push_back({Rational{-inst.v[i]} + off, -off});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rational off = Rational{static_cast<std::int64_t>(i + 1)} * art.epsilon;
    art.groups.b_prime.push_back(robots.size());
    robots.push_back(
        {-(art.makespan_bound - Rational{2} * Rational{inst.u[i]}) + Rational{2} - off,
         Rational{-2} + off});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rational off = Rational{static_cast<std::int64_t>(i + 1)} * art.delta;
    art.groups.c.push_back(robots.size());
    robots.push_back({Rational{2} * Rational{inst.w[i]} + n_rat * q - off, off});
  }

  art.instance.source = art.source;
  art.instance.metric = Metric::L1Plane;
  return art;
}

SoundnessReport layout_soundness(const ReductionArtifacts& art) {
  const std::size_t n = art.n3dm.size();
  const auto& robots = art.instance.robots;
  const Point2 origin{Rational{0}, Rational{0}};

  SoundnessReport report;

  // Binding b robot: the one of maximum x.  Each c robot strictly to its left
  // is reported once, against that b.
  std::size_t bind = 0;
  for (std::size_t j = 1; j < n; ++j)
    if (robots[art.groups.b[j]].x > robots[art.groups.b[bind]].x) bind = j;

  bool first = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational slack = robots[art.groups.c[k]].x - robots[art.groups.b[j]].x;
      if (first || slack < report.min_slack) {
        report.min_slack = slack;
        report.min_b_index = j + 1;
        report.min_c_index = k + 1;
        first = false;
      }
    }
    const Rational binding_slack = robots[art.groups.c[k]].x - robots[art.groups.b[bind]].x;
    if (binding_slack.is_negative())
      report.violations.push_back({bind + 1, k + 1, binding_slack});
  }

  auto premise = [&](bool ok, const std::string& name) {
    if (!ok) report.premise_failures.push_back(name);
  };

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Point2& cur = robots[art.groups.a[i]];
    const Point2& nxt = robots[art.groups.a[i + 1]];
    premise(cur.x > nxt.x && cur.y < nxt.y,
            "a group is not a Pareto front at rows " + pair_str(i + 1, i + 2));
  }
  for (std::size_t i = 0; i < n; ++i) {
    premise(l1_distance(origin, robots[art.groups.a[i]]) == Rational{art.n3dm.u[i]},
            "norm of a_" + std::to_string(i + 1) + " differs from u");
    premise(l1_distance(robots[art.groups.a_prime[i]], origin) == art.makespan_bound,
            "a'_" + std::to_string(i + 1) + " is not at distance L from the origin");
    premise(l1_distance(robots[art.groups.b_prime[i]], robots[art.groups.a[i]]) ==
                art.makespan_bound - Rational{art.n3dm.u[i]},
            "distance a_" + std::to_string(i + 1) + " to b'_" + std::to_string(i + 1) +
                " differs from L - u");
    for (std::size_t j = 0; j < n; ++j)
      premise(l1_distance(robots[art.groups.b[j]], robots[art.groups.a[i]]) ==
                  Rational{art.n3dm.u[i] + art.n3dm.v[j]},
              "distance a to b differs from u + v at " + pair_str(i + 1, j + 1));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Point2& bp = robots[art.groups.b_prime[i]];
      const Point2& b = robots[art.groups.b[j]];
      premise(bp.x <= b.x && bp.y <= b.y,
              "b'_" + std::to_string(i + 1) + " does not coordinate-dominate below b_" +
                  std::to_string(j + 1));
    }
  const Rational two_delta = Rational{2} * art.delta;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t k2 = k + 1; k2 < n; ++k2)
      premise(l1_distance(robots[art.groups.c[k]], robots[art.groups.c[k2]]) >= two_delta,
              "c robots " + pair_str(k + 1, k2 + 1) + " closer than 2*delta");

  report.sound = report.violations.empty() && report.premise_failures.empty();
  return report;
}

std::int64_t required_shift(const N3dmInstance& inst) {
  const auto n = static_cast<__int128>(inst.size());
  const __int128 w_min = inst.w.back();
  const __int128 v_min = inst.v.back();
  const __int128 delta = 2 * (static_cast<__int128>(inst.q) - w_min);
  // Binding pair is (b_n, c_n): need 2(w_n + k) + n(q + k) - n*delta >= -v_n + 1.
  const __int128 numerator = n * delta - 2 * w_min - n * inst.q - v_min + 1;
  if (numerator <= 0) return 0;
  const __int128 divisor = n + 2;
  return static_cast<std::int64_t>((numerator + divisor - 1) / divisor);
}

WakeupTree canonical_schedule(const ReductionArtifacts& art, const Matching& m) {
  if (!matching_satisfies(art.n3dm, m))
    throw ValidationError("canonical schedule: matching does not solve the N3DM instance");
  const auto report = layout_soundness(art);
  if (!report.sound) {
    if (!report.violations.empty()) {
      const auto& v = report.violations.front();
      throw ValidationError("canonical schedule: layout unsound, c_" + std::to_string(v.c_index) +
                            " lies left of b_" + std::to_string(v.b_index) + " by " +
                            (-v.slack).str());
    }
    throw ValidationError("canonical schedule: layout premise failed: " +
                          report.premise_failures.front());
  }

  const std::size_t n = art.n3dm.size();
  WakeupTree tree;
  tree.parent.assign(6 * n, std::nullopt);

  // Zero-weight chain over the colocated roots; each link also frees one
  // dispatch slot, the last root keeps two.
  for (std::size_t l = 1; l < n; ++l) tree.parent[art.groups.roots[l]] = art.groups.roots[l - 1];

  for (std::size_t l = 0; l < m.triples.size(); ++l) {
    const auto [i, j, k] = m.triples[l];
    const std::size_t dispatcher = art.groups.roots[std::min(l + 1, n - 1)];
    tree.parent[art.groups.a[i]] = dispatcher;
    tree.parent[art.groups.a_prime[i]] = art.groups.a[i];
    tree.parent[art.groups.b[j]] = art.groups.a[i];
    tree.parent[art.groups.b_prime[i]] = art.groups.b[j];
    tree.parent[art.groups.c[k]] = art.groups.b[j];
  }

  const auto eval = evaluate_tree(tree, art.instance);
  if (eval.makespan != art.makespan_bound)
    throw std::logic_error("canonical schedule: makespan " + eval.makespan.str() +
                           " differs from bound " + art.makespan_bound.str());
  return tree;
}

std::pair<FtpInstance, Rational> scale_to_integers(const ReductionArtifacts& art) {
  const Rational scale{static_cast<std::int64_t>(art.n3dm.size())};
  FtpInstance scaled = art.instance;
  for (Point2& p : scaled.robots) {
    p.x *= scale;
    p.y *= scale;
    if (!p.x.is_integer() || !p.y.is_integer())
      throw std::logic_error("scale_to_integers: coordinate (" + p.x.str() + "," + p.y.str() +
                             ") is not integral after scaling");
  }
  return {std::move(scaled), scale};
}

GridEmbedding embed_grid(const FtpInstance& inst) {
  validate_instance(inst);
  if (inst.metric != Metric::L1Plane)
    throw ValidationError("grid embedding requires an L1 plane instance");
  for (std::size_t i = 0; i < inst.size(); ++i)
    if (!inst.robots[i].x.is_integer() || !inst.robots[i].y.is_integer())
      throw ValidationError("grid embedding requires integer coordinates; robot " +
                            std::to_string(i) + " is at (" + inst.robots[i].x.str() + "," +
                            inst.robots[i].y.str() + ")");

  GridEmbedding emb;
  std::int64_t max_x = inst.robots[0].x.num(), max_y = inst.robots[0].y.num();
  emb.origin_x = max_x;
  emb.origin_y = max_y;
  for (const Point2& p : inst.robots) {
    emb.origin_x = std::min(emb.origin_x, p.x.num());
    emb.origin_y = std::min(emb.origin_y, p.y.num());
    max_x = std::max(max_x, p.x.num());
    max_y = std::max(max_y, p.y.num());
  }
  emb.width = static_cast<std::size_t>(max_x - emb.origin_x) + 1;
  emb.height = static_cast<std::size_t>(max_y - emb.origin_y) + 1;
  for (const Point2& p : inst.robots)
    emb.robot_cells.push_back({static_cast<std::size_t>(p.x.num() - emb.origin_x),
                               static_cast<std::size_t>(p.y.num() - emb.origin_y)});
  return emb;
}

std::vector<std::vector<std::int64_t>> grid_all_pairs(const GridEmbedding& emb) {
  const std::size_t cells = emb.width * emb.height;
  const std::size_t n = emb.robot_cells.size();
  std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(n, 0));
  std::vector<std::int64_t> dist(cells);

  for (std::size_t r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    const auto [sx, sy] = emb.robot_cells[r];
    std::deque<std::size_t> queue{sy * emb.width + sx};
    dist[queue.front()] = 0;
    while (!queue.empty()) {
      const std::size_t cell = queue.front();
      queue.pop_front();
      const std::size_t cx = cell % emb.width, cy = cell / emb.width;
      const auto visit = [&](std::size_t nx, std::size_t ny) {
        const std::size_t next = ny * emb.width + nx;
        if (dist[next] < 0) {
          dist[next] = dist[cell] + 1;
          queue.push_back(next);
        }
      };
      if (cx > 0) visit(cx - 1, cy);
      if (cx + 1 < emb.width) visit(cx + 1, cy);
      if (cy > 0) visit(cx, cy - 1);
      if (cy + 1 < emb.height) visit(cx, cy + 1);
    }
    for (std::size_t s = 0; s < n; ++s)
      out[r][s] = dist[emb.robot_cells[s].second * emb.width + emb.robot_cells[s].first];
  }
  return out;
}

FtpInstance perturb_unique(const FtpInstance& inst, const Rational& rho) {
  validate_instance(inst);
  if (inst.metric != Metric::L1Plane)
    throw ValidationError("perturbation requires an L1 plane instance");
  if (!rho.is_positive()) throw ValidationError("perturbation radius must be positive");

  std::map<Point2, std::vector<std::size_t>> piles;
  for (std::size_t i = 0; i < inst.size(); ++i) piles[inst.robots[i]].push_back(i);

  const Rational two_rho = Rational{2} * rho;
  for (auto it = piles.begin(); it != piles.end(); ++it)
    for (auto jt = std::next(it); jt != piles.end(); ++jt)
      if (l1_distance(it->first, jt->first) <= two_rho)
        throw ValidationError("perturbation disks of (" + it->first.x.str() + "," +
                              it->first.y.str() + ") and (" + jt->first.x.str() + "," +
                              jt->first.y.str() + ") touch; choose rho below " +
                              (l1_distance(it->first, jt->first) / Rational{2}).str());

  FtpInstance out = inst;
  for (auto& [pos, members] : piles) {
    if (members.size() < 2) continue;
    // source takes slot 0 so its coordinates never move
    auto ordered = members;
    std::sort(ordered.begin(), ordered.end(), [&](std::size_t a, std::size_t b) {
      const bool a_src = a == inst.source, b_src = b == inst.source;
      if (a_src != b_src) return a_src;
      return a < b;
    });
    const Rational step = rho / Rational{static_cast<std::int64_t>(ordered.size())};
    for (std::size_t t = 0; t < ordered.size(); ++t)
      out.robots[ordered[t]].x = pos.x + Rational{static_cast<std::int64_t>(t)} * step;
  }
  return out;
}

}  // namespace ftag
