#pragma once

#include <string>

#include "rlab/sweeps.hpp"

namespace rlab {

// Self-contained log-log SVG chart of a sweep report: data points with error
// bars, the fitted line, and a dashed theory reference line whose slope is
// recorded in a data-theory-slope attribute. No external tools involved.
std::string report_to_svg(const SweepReport& report, const std::string& title);

}  // namespace rlab
