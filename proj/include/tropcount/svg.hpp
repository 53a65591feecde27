#pragma once

#include <string>

#include "tropcount/tropical_curve.hpp"

namespace tropcount {

/// Curve with filled marked points on the left (viewport: bounding box of the
/// vertices and marks plus a 10% margin, rays clipped to it), the dual
/// subdivision on the right. Weights above 1 are labeled. Deterministic.
std::string render_svg(const PlaneTropicalCurve& curve, const MarkedConfiguration& marks);

}  // namespace tropcount
