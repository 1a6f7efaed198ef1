#pragma once

#include <string>

#include "wskdc/metrics.hpp"

namespace wskdc {

/// Renders aggregated reject curves as a standalone SVG: mean precision and
/// recall over coverage, shaded 5%-95% quantile bands, and a dashed vertical
/// marker at the aggregate tau coverage when one is set.
void write_reject_curve_svg(const std::string& path, const RunSummary& summary);

}  // namespace wskdc
