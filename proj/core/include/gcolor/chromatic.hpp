#pragma once

#include <cstddef>

#include "gcolor/graph.hpp"

namespace gcolor {

inline constexpr std::size_t kChromaticMaxVertices = 30;

/// Exact chromatic number by DSATUR-ordered branch and bound.
/// Throws CapabilityError above kChromaticMaxVertices vertices.
int exact_chromatic_number(const Graph& g);

}  // namespace gcolor
