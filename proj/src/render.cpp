#include "ftag/render.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ftag {

namespace {

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

struct Family {
  const char* name;
  const char* color;
};

constexpr Family kFamilies[] = {
    {"roots", "#333333"}, {"a", "#1f77b4"}, {"a'", "#79b8e0"},
    {"b", "#2ca02c"},     {"b'", "#93d393"}, {"c", "#d62728"},
};

// family id (0..5) and 1-based position for every robot, -1 when ungrouped
std::vector<std::pair<int, std::size_t>> family_of(std::size_t n, const GroupIndex* groups) {
  std::vector<std::pair<int, std::size_t>> fam(n, {-1, 0});
  if (!groups) return fam;
  const std::vector<std::size_t>* lists[] = {&groups->roots,   &groups->a, &groups->a_prime,
                                             &groups->b,       &groups->b_prime, &groups->c};
  for (int f = 0; f < 6; ++f)
    for (std::size_t pos = 0; pos < lists[f]->size(); ++pos) {
      const std::size_t robot = (*lists[f])[pos];
      if (robot < n) fam[robot] = {f, pos + 1};
    }
  return fam;
}

}  // namespace

std::string render_svg(const FtpInstance& inst, const WakeupTree* tree, const GroupIndex* groups) {
  validate_instance(inst);
  if (inst.metric != Metric::L1Plane)
    throw ValidationError("rendering requires an L1 plane instance");

  double min_x = inst.robots[0].x.to_double(), max_x = min_x;
  double min_y = inst.robots[0].y.to_double(), max_y = min_y;
  for (const Point2& p : inst.robots) {
    min_x = std::min(min_x, p.x.to_double());
    max_x = std::max(max_x, p.x.to_double());
    min_y = std::min(min_y, p.y.to_double());
    max_y = std::max(max_y, p.y.to_double());
  }
  min_x = std::min(min_x, 0.0);
  max_x = std::max(max_x, 0.0);
  min_y = std::min(min_y, 0.0);
  max_y = std::max(max_y, 0.0);
  const double extent = std::max({max_x - min_x, max_y - min_y, 1.0});
  const double pad = 0.08 * extent;
  min_x -= pad;
  max_x += pad;
  min_y -= pad;
  max_y += pad;

  const double scale = 720.0 / extent;
  const double width = (max_x - min_x) * scale;
  const double height = (max_y - min_y) * scale;
  const auto sx = [&](double x) { return (x - min_x) * scale; };
  const auto sy = [&](double y) { return (max_y - y) * scale; };  // flip: svg y grows downward
  const auto px = [&](const Point2& p) { return sx(p.x.to_double()); };
  const auto py = [&](const Point2& p) { return sy(p.y.to_double()); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << fmt(width)
      << " " << fmt(height) << "\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" fill=\"#ffffff\"/>\n";

  // origin axes
  svg << "  <line x1=\"" << fmt(sx(min_x)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\""
      << fmt(sx(max_x)) << "\" y2=\"" << fmt(sy(0))
      << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  svg << "  <line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(min_y)) << "\" x2=\"" << fmt(sx(0))
      << "\" y2=\"" << fmt(sy(max_y)) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

  if (tree) {
    for (std::size_t child = 0; child < tree->size() && child < inst.size(); ++child) {
      if (!tree->parent[child]) continue;
      const std::size_t par = *tree->parent[child];
      if (par >= inst.size()) continue;
      if (inst.distance(par, child).is_zero()) continue;  // colocated hop: nothing to draw
      const Point2& from = inst.robots[par];
      const Point2& to = inst.robots[child];
      svg << "  <polyline points=\"" << fmt(px(from)) << "," << fmt(py(from)) << " "
          << fmt(px(to)) << "," << fmt(py(from)) << " " << fmt(px(to)) << "," << fmt(py(to))
          << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1.5\"/>\n";
    }
  }

  const auto fam = family_of(inst.size(), groups);
  const double radius = 5.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto [f, pos] = fam[i];
    const char* color = f >= 0 ? kFamilies[f].color : "#1f77b4";
    svg << "  <circle cx=\"" << fmt(px(inst.robots[i])) << "\" cy=\"" << fmt(py(inst.robots[i]))
        << "\" r=\"" << fmt(radius) << "\" fill=\"" << color << "\" stroke=\"#000000\""
        << (i == inst.source ? " stroke-width=\"2.5\"" : " stroke-width=\"0.8\"") << "/>\n";
    std::string label;
    if (f >= 0)
      label = (f == 0 ? std::string("r") : std::string(kFamilies[f].name)) + std::to_string(pos);
    else
      label = std::to_string(i);
    svg << "  <text x=\"" << fmt(px(inst.robots[i]) + radius + 2) << "\" y=\""
        << fmt(py(inst.robots[i]) - radius) << "\" font-size=\"12\" font-family=\"sans-serif\">"
        << label << "</text>\n";
  }

  if (groups) {
    double ly = 18.0;
    for (const Family& family : kFamilies) {
      svg << "  <rect x=\"8\" y=\"" << fmt(ly - 10) << "\" width=\"12\" height=\"12\" fill=\""
          << family.color << "\"/>\n";
      svg << "  <text x=\"24\" y=\"" << fmt(ly)
          << "\" font-size=\"12\" font-family=\"sans-serif\">" << family.name << "</text>\n";
      ly += 16.0;
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

void render_svg_file(const std::string& path, const FtpInstance& inst, const WakeupTree* tree,
                     const GroupIndex* groups) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << render_svg(inst, tree, groups);
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace ftag
