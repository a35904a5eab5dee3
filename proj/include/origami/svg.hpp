#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "origami/surface.hpp"

namespace origami {

// Grid cell assigned to each drawn square; square 1 (or the ball's base)
// starts at the origin, a sigma step is +1 in x and a tau step +1 in y.
// Forward steps are exhausted first; squares only reachable backwards are
// attached on the -x/-y side, and squares whose every gluing would land on
// an occupied cell start a new component further right.  Exposed so layouts
// can be asserted without parsing SVG text.
using GridCell = std::pair<std::int64_t, std::int64_t>;
std::map<SquareId, GridCell> layout_cells(const Origami& o);
std::map<SquareId, GridCell> layout_cells(const Origami& o, const Ball& window);

// Deterministic SVG drawing: unit squares labeled with their ids; gluings
// that are not realized as shared borders (self-gluings, collisions, squares
// outside the window) become dashed edges labeled with the neighbor id.
std::string render_svg(const Origami& o);
std::string render_svg(const Origami& o, const Ball& window);

}  // namespace origami
