#pragma once

#include <string>

#include "wftq/config.hpp"
#include "wftq/symmetry.hpp"

namespace wftq {

/// Static SVG 1.1 figure of a symmetrization: the quadrilateral directions
/// from the basepoint (solid), the tangent images (dashed) and the reflected
/// parallelogram (bold), with a role legend. The viewBox is fitted to the
/// geometry with a 5% margin. Output is deterministic for identical inputs.
std::string symmetrization_svg(const AngularConfig& cfg,
                               const ParallelogramReport& report);

}  // namespace wftq
