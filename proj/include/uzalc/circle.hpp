#pragma once

#include <vector>

#include "uzalc/series.hpp"

namespace uzalc::detail {

/// Cached table of n equispaced unit-circle points, entry j at angle 2 pi j / n.
const std::vector<Complex>& unit_circle(int n);

}  // namespace uzalc::detail
