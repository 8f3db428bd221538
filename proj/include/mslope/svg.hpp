#pragma once

#include "mslope/report.hpp"

#include <string>

namespace mslope {

// Deterministic SVG picture of the three edgepath systems of an analysis
// report, drawn over the (u, v) strip of D with a light Farey-edge
// background.  Identical input yields byte-identical output.
std::string render_svg(const AnalysisReport& r);

}  // namespace mslope
