#include "ftag/io.hpp"

#include <fstream>
#include <sstream>

namespace ftag {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const Json& member(const Json& doc, const std::string& key, const std::string& path) {
  if (!doc.is_object()) fail(path, "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

Rational rational_at(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational{j.get<std::int64_t>()};
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

std::int64_t integer_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t index_at(const Json& j, const std::string& path) {
  const std::int64_t v = integer_at(j, path);
  if (v < 0) fail(path, "expected a nonnegative index");
  return static_cast<std::size_t>(v);
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::vector<std::int64_t> integer_list(const Json& j, const std::string& path) {
  array_at(j, path);
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(integer_at(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::size_t> index_list(const Json& j, const std::string& path) {
  array_at(j, path);
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(index_at(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Json index_array(const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (std::size_t x : xs) out.push_back(x);
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

void save_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << doc.dump(2) << '\n';
}

FtpInstance instance_from_json(const Json& doc) {
  FtpInstance inst;
  const std::string metric = member(doc, "metric", "instance").is_string()
                                 ? doc["metric"].get<std::string>()
                                 : std::string{};
  if (metric == "L1") {
    inst.metric = Metric::L1Plane;
  } else if (metric == "matrix") {
    inst.metric = Metric::ExplicitMatrix;
  } else {
    fail("metric", "unknown metric tag \"" + metric + "\"");
  }

  const Json& robots = array_at(member(doc, "robots", "instance"), "robots");
  for (std::size_t i = 0; i < robots.size(); ++i) {
    const std::string path = "robots[" + std::to_string(i) + "]";
    const Json& pt = array_at(robots[i], path);
    if (pt.size() != 2) fail(path, "expected [x, y]");
    inst.robots.push_back(
        {rational_at(pt[0], path + "[0]"), rational_at(pt[1], path + "[1]")});
  }
  inst.source = index_at(member(doc, "source", "instance"), "source");

  if (inst.metric == Metric::ExplicitMatrix) {
    const Json& rows = array_at(member(doc, "matrix", "instance"), "matrix");
    DistanceMatrix m;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string path = "matrix[" + std::to_string(i) + "]";
      const Json& row = array_at(rows[i], path);
      std::vector<Rational> entries;
      for (std::size_t j = 0; j < row.size(); ++j)
        entries.push_back(rational_at(row[j], path + "[" + std::to_string(j) + "]"));
      m.push_back(std::move(entries));
    }
    inst.matrix = std::move(m);
  } else if (doc.contains("matrix")) {
    fail("matrix", "metric \"L1\" must not carry a matrix");
  }
  validate_instance(inst);
  return inst;
}

Json instance_to_json(const FtpInstance& inst) {
  Json doc;
  doc["metric"] = inst.metric == Metric::L1Plane ? "L1" : "matrix";
  Json robots = Json::array();
  for (const Point2& p : inst.robots) robots.push_back(Json::array({p.x.str(), p.y.str()}));
  doc["robots"] = std::move(robots);
  doc["source"] = inst.source;
  if (inst.matrix) {
    Json rows = Json::array();
    for (const auto& row : *inst.matrix) {
      Json cells = Json::array();
      for (const Rational& r : row) cells.push_back(r.str());
      rows.push_back(std::move(cells));
    }
    doc["matrix"] = std::move(rows);
  }
  return doc;
}

WakeupTree schedule_from_json(const Json& doc) {
  const Json& parent = array_at(member(doc, "parent", "schedule"), "parent");
  WakeupTree tree;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    const std::string path = "parent[" + std::to_string(i) + "]";
    if (parent[i].is_null())
      tree.parent.push_back(std::nullopt);
    else
      tree.parent.push_back(index_at(parent[i], path));
  }
  return tree;
}

Json schedule_to_json(const WakeupTree& tree) {
  Json parent = Json::array();
  for (const auto& p : tree.parent)
    p ? parent.push_back(*p) : parent.push_back(nullptr);
  Json doc;
  doc["parent"] = std::move(parent);
  return doc;
}

N3dmInstance n3dm_from_json(const Json& doc) {
  auto u = integer_list(member(doc, "U", "n3dm"), "U");
  auto v = integer_list(member(doc, "V", "n3dm"), "V");
  auto w = integer_list(member(doc, "W", "n3dm"), "W");
  try {
    return validate_n3dm(std::move(u), std::move(v), std::move(w));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("n3dm: ") + e.what());
  }
}

Json n3dm_to_json(const N3dmInstance& inst) {
  Json doc;
  doc["U"] = inst.u;
  doc["V"] = inst.v;
  doc["W"] = inst.w;
  return doc;
}

Json matching_to_json(const N3dmInstance& inst, const Matching& m) {
  Json triples = Json::array();
  for (const auto& [i, j, k] : m.triples) triples.push_back(Json::array({i, j, k}));
  Json doc;
  doc["q"] = inst.q;
  doc["triples"] = std::move(triples);
  return doc;
}

Matching matching_from_json(const Json& doc) {
  const Json& triples = array_at(member(doc, "triples", "matching"), "triples");
  Matching m;
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const std::string path = "triples[" + std::to_string(t) + "]";
    const Json& triple = array_at(triples[t], path);
    if (triple.size() != 3) fail(path, "expected [i, j, k]");
    m.triples.push_back({index_at(triple[0], path + "[0]"), index_at(triple[1], path + "[1]"),
                         index_at(triple[2], path + "[2]")});
  }
  return m;
}

Json metadata_to_json(const ReductionArtifacts& art, std::int64_t shift_used) {
  Json groups;
  groups["roots"] = index_array(art.groups.roots);
  groups["a"] = index_array(art.groups.a);
  groups["a_prime"] = index_array(art.groups.a_prime);
  groups["b"] = index_array(art.groups.b);
  groups["b_prime"] = index_array(art.groups.b_prime);
  groups["c"] = index_array(art.groups.c);

  Json doc;
  doc["L"] = art.makespan_bound.str();
  doc["epsilon"] = art.epsilon.str();
  doc["delta"] = art.delta.str();
  doc["shift"] = shift_used;
  doc["source"] = art.source;
  doc["groups"] = std::move(groups);
  return doc;
}

ReductionMetadata metadata_from_json(const Json& doc) {
  ReductionMetadata meta;
  meta.makespan_bound = rational_at(member(doc, "L", "metadata"), "L");
  meta.epsilon = rational_at(member(doc, "epsilon", "metadata"), "epsilon");
  meta.delta = rational_at(member(doc, "delta", "metadata"), "delta");
  meta.shift = integer_at(member(doc, "shift", "metadata"), "shift");
  meta.source = index_at(member(doc, "source", "metadata"), "source");
  const Json& groups = member(doc, "groups", "metadata");
  meta.groups.roots = index_list(member(groups, "roots", "groups"), "groups.roots");
  meta.groups.a = index_list(member(groups, "a", "groups"), "groups.a");
  meta.groups.a_prime = index_list(member(groups, "a_prime", "groups"), "groups.a_prime");
  meta.groups.b = index_list(member(groups, "b", "groups"), "groups.b");
  meta.groups.b_prime = index_list(member(groups, "b_prime", "groups"), "groups.b_prime");
  meta.groups.c = index_list(member(groups, "c", "groups"), "groups.c");
  return meta;
}

Json grid_to_json(const GridEmbedding& emb) {
  Json cells = Json::array();
  for (const auto& [x, y] : emb.robot_cells) cells.push_back(Json::array({x, y}));
  Json doc;
  doc["width"] = emb.width;
  doc["height"] = emb.height;
  doc["origin"] = Json::array({emb.origin_x, emb.origin_y});
  doc["cells"] = std::move(cells);
  return doc;
}

namespace {

std::string decision_str(DecisionOutcome d) {
  switch (d) {
    case DecisionOutcome::Yes: return "yes";
    case DecisionOutcome::No: return "no";
    default: return "inconclusive";
  }
}

}  // namespace

Json report_to_json(const VerificationReport& report) {
  Json doc;
  doc["n3dm_answer"] = report.n3dm_yes ? "yes" : "no";
  doc["shift_used"] = report.shift_used;
  doc["L"] = report.makespan_bound.str();
  doc["layout_sound"] = report.layout_sound;
  doc["canonical_makespan"] =
      report.canonical_makespan ? Json(report.canonical_makespan->str()) : Json(nullptr);
  doc["ftp_decision"] = decision_str(report.ftp_decision);
  if (report.ftp_optimum)
    doc["ftp_optimum"] = report.ftp_optimum->str();
  else
    doc["ftp_optimum"] = report.ftp_decision == DecisionOutcome::No ? "above-L" : "inconclusive";
  doc["conclusive"] = report.conclusive;
  doc["equivalence_holds"] = report.equivalence_holds;
  Json solver;
  solver["nodes_explored"] = report.solver_stats.nodes_explored;
  solver["pruned_bound"] = report.solver_stats.pruned_bound;
  solver["pruned_lower_bound"] = report.solver_stats.pruned_lower_bound;
  solver["pruned_symmetry"] = report.solver_stats.pruned_symmetry;
  doc["solver"] = std::move(solver);
  Json timings;
  timings["n3dm"] = report.n3dm_millis;
  timings["solver"] = report.solver_millis;
  doc["timings_ms"] = std::move(timings);
  return doc;
}

VerificationReport report_from_json(const Json& doc) {
  VerificationReport report;
  const std::string answer = member(doc, "n3dm_answer", "report").get<std::string>();
  report.n3dm_yes = answer == "yes";
  report.shift_used = integer_at(member(doc, "shift_used", "report"), "shift_used");
  report.makespan_bound = rational_at(member(doc, "L", "report"), "L");
  report.layout_sound = member(doc, "layout_sound", "report").get<bool>();
  const Json& canonical = member(doc, "canonical_makespan", "report");
  if (!canonical.is_null()) report.canonical_makespan = rational_at(canonical, "canonical_makespan");
  const std::string decision = member(doc, "ftp_decision", "report").get<std::string>();
  if (decision == "yes")
    report.ftp_decision = DecisionOutcome::Yes;
  else if (decision == "no")
    report.ftp_decision = DecisionOutcome::No;
  else
    report.ftp_decision = DecisionOutcome::Inconclusive;
  const Json& optimum = member(doc, "ftp_optimum", "report");
  if (optimum.is_string()) {
    const std::string text = optimum.get<std::string>();
    if (text != "above-L" && text != "inconclusive")
      report.ftp_optimum = rational_at(optimum, "ftp_optimum");
  }
  report.conclusive = member(doc, "conclusive", "report").get<bool>();
  report.equivalence_holds = member(doc, "equivalence_holds", "report").get<bool>();
  const Json& solver = member(doc, "solver", "report");
  report.solver_stats.nodes_explored =
      member(solver, "nodes_explored", "solver").get<std::uint64_t>();
  report.solver_stats.pruned_bound = member(solver, "pruned_bound", "solver").get<std::uint64_t>();
  report.solver_stats.pruned_lower_bound =
      member(solver, "pruned_lower_bound", "solver").get<std::uint64_t>();
  report.solver_stats.pruned_symmetry =
      member(solver, "pruned_symmetry", "solver").get<std::uint64_t>();
  const Json& timings = member(doc, "timings_ms", "report");
  report.n3dm_millis = member(timings, "n3dm", "timings_ms").get<double>();
  report.solver_millis = member(timings, "solver", "timings_ms").get<double>();
  return report;
}

}  // namespace ftag
