#pragma once

#include <optional>
#include <string>

#include "linftrees/dissimilarity.hpp"

namespace linftrees {

/// SVG of the 3-leaf district decomposition after projecting along (1,1,1):
/// three open sector districts with their topology labels, three tie rays
/// whose districts pair the claw with two cherries, and the claw district at
/// the origin. An optional 3-leaf input is overlaid together with the hexagon
/// image of its distance cube; hexagon corners realizing resolved closest
/// ultrametrics are filled.
std::string svg_fan3(const std::optional<DissimilarityMap>& overlay);

}  // namespace linftrees
