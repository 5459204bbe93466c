#pragma once

#include <string>

#include "ftag/instance.hpp"
#include "ftag/reduction.hpp"
#include "ftag/wakeup_tree.hpp"

namespace ftag {

// SVG figure of an L1 plane instance: one labeled marker per robot (colored by
// family when group maps are given), origin axes, and optional schedule edges
// drawn as axis-aligned elbows.  Zero-weight edges are omitted.
std::string render_svg(const FtpInstance& inst, const WakeupTree* tree = nullptr,
                       const GroupIndex* groups = nullptr);

void render_svg_file(const std::string& path, const FtpInstance& inst,
                     const WakeupTree* tree = nullptr, const GroupIndex* groups = nullptr);

}  // namespace ftag
