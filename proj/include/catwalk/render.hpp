#pragma once

#include <string>

#include "catwalk/path.hpp"

namespace catwalk {

/// Character-grid profile, one column per step: '/' rises, '\' falls, '_'
/// lies on its level line, and a catastrophe fills its column with '\' down
/// to the axis. Flats on the axis get an extra bottom row. Deterministic
/// byte output; the empty path renders as a single empty line.
std::string render_ascii(const Path& p);

/// Self-contained SVG with a unit-square grid, the path as a polyline, and
/// catastrophe chords labeled "D_i". Deterministic byte output.
std::string render_svg(const Path& p);

}  // namespace catwalk
