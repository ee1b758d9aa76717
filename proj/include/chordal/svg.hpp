#pragma once

#include "chordal/chords.hpp"

#include <iosfwd>

namespace chordal {

/// Draws the ellipse outline, the n lattice points and the n-1 chords
/// from the anchor point a + b. The viewBox is centered at the origin and
/// spans 1.1*(a+|b|) in each half-axis. Only ellipse, line and circle
/// elements are emitted.
void write_figure_svg(std::ostream& os, int n, const EllipseSpec& spec);

}  // namespace chordal
