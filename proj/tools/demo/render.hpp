#pragma once

#include <string>

#include "tracta/matroid.hpp"

namespace tracta::demo {

struct RenderOptions {
  long radius = 3;   // sample coordinates in [-radius, radius]
  int steps = 2;     // samples per unit
  int size = 480;    // canvas width and height in pixels
};

/// SVG picture of a rank-2 valuated matroid on 3 or 4 elements, normalised to X_n = 0.
/// Draws sampled points of the tropical linear space and segments between adjacent
/// samples whose midpoint is also a member. Throws PreconditionError for other inputs.
std::string render_svg(const PluckerVector& p, const RenderOptions& opts = {});

}  // namespace tracta::demo
