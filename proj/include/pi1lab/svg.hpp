// SVG pictures of a space and loops drawn in it.
//
// Plane coordinates map to the canvas by X = 40 + 1000 x, Y = 1040 - 1000 y,
// and every canvas coordinate is written with exactly three fractional
// digits, rounded half to even from the exact rational. The output therefore
// depends only on the scene, byte for byte.

#pragma once

#include "pi1lab/loops.hpp"
#include "pi1lab/spaces.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pi1lab {

struct NamedLoop {
  std::string name;
  Loop loop;
};

struct SvgScene {
  /// Drawn as one <line> per edge: the three edges of C_2..C_max, plus alpha in Y.
  std::optional<Space> space;
  /// Drawn as one <polyline> each, with classes loop-0, loop-1, ...
  std::vector<NamedLoop> loops;
};

std::string render_svg(const SvgScene& scene);

/// Throws std::runtime_error when the file cannot be written.
void write_svg(const SvgScene& scene, const std::string& path);

}  // namespace pi1lab
