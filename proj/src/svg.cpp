#include "origami/svg.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace origami {

namespace {

std::map<SquareId, GridCell> layout(const Origami& o,
                                    const std::vector<SquareId>& squares,
                                    SquareId start) {
  std::unordered_set<SquareId> allowed(squares.begin(), squares.end());
  std::map<SquareId, GridCell> pos;
  std::map<GridCell, SquareId> occupied;
  std::set<SquareId> unplaced(squares.begin(), squares.end());
  std::vector<SquareId> placement_order;
  std::deque<SquareId> queue;
  std::int64_t max_x = 0;

  const auto place = [&](SquareId s, GridCell c) {
    pos.emplace(s, c);
    occupied.emplace(c, s);
    unplaced.erase(s);
    placement_order.push_back(s);
    queue.push_back(s);
    max_x = std::max(max_x, c.first);
  };
  place(start, {0, 0});

  while (!unplaced.empty()) {
    // Forward growth: sigma to the right, tau upward.
    while (!queue.empty()) {
      const SquareId p = queue.front();
      queue.pop_front();
      const GridCell c = pos.at(p);
      const std::pair<SquareId, GridCell> steps[2] = {
          {o.sigma(p), {c.first + 1, c.second}},
          {o.tau(p), {c.first, c.second + 1}},
      };
      for (const auto& [to, cell] : steps) {
        if (!allowed.count(to) || pos.count(to)) continue;
        if (occupied.count(cell)) continue;  // collision: leave for later
        place(to, cell);
      }
    }
    if (unplaced.empty()) break;

    // Backward attachment: the first placed square with a free cell on its
    // left or below it for a still-unplaced neighbor.
    bool attached = false;
    for (const SquareId p : placement_order) {
      const GridCell c = pos.at(p);
      const std::pair<SquareId, GridCell> steps[2] = {
          {o.sigma_inv(p), {c.first - 1, c.second}},
          {o.tau_inv(p), {c.first, c.second - 1}},
      };
      for (const auto& [to, cell] : steps) {
        if (!allowed.count(to) || pos.count(to)) continue;
        if (occupied.count(cell)) continue;
        place(to, cell);
        attached = true;
        break;
      }
      if (attached) break;
    }
    if (attached) continue;

    // Nothing attaches anywhere: open a new component to the right.
    place(*unplaced.begin(), {max_x + 2, 0});
  }
  return pos;
}

std::string render(const Origami& o, const std::map<SquareId, GridCell>& pos) {
  constexpr std::int64_t cell = 48, margin = 24;
  std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& [id, c] : pos) {
    min_x = std::min(min_x, c.first);
    max_x = std::max(max_x, c.first);
    min_y = std::min(min_y, c.second);
    max_y = std::max(max_y, c.second);
  }
  const std::int64_t width = (max_x - min_x + 1) * cell + 2 * margin;
  const std::int64_t height = (max_y - min_y + 1) * cell + 2 * margin;
  const auto px = [&](const GridCell& c) {
    return margin + (c.first - min_x) * cell;
  };
  const auto py = [&](const GridCell& c) {
    return margin + (max_y - c.second) * cell;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";

  for (const auto& [id, c] : pos) {
    const std::int64_t x = px(c), y = py(c);
    svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell
        << "\" height=\"" << cell
        << "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 5
        << "\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"16\" fill=\"#000000\">"
        << id << "</text>\n";
  }

  // Dashed markers for gluings that are not shared borders.
  const auto realized = [&](SquareId to, const GridCell& cell_at) {
    const auto it = pos.find(to);
    return it != pos.end() && it->second == cell_at;
  };
  const auto dashed = [&](std::int64_t x1, std::int64_t y1, std::int64_t x2,
                          std::int64_t y2, std::int64_t lx, std::int64_t ly,
                          const char* anchor, SquareId neighbor) {
    svg << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
        << "\" y2=\"" << y2
        << "\" stroke=\"#777777\" stroke-width=\"2\" "
           "stroke-dasharray=\"4 3\"/>\n";
    svg << "<text x=\"" << lx << "\" y=\"" << ly << "\" text-anchor=\""
        << anchor
        << "\" font-family=\"monospace\" font-size=\"10\" fill=\"#555555\">"
        << neighbor << "</text>\n";
  };
  for (const auto& [id, c] : pos) {
    const std::int64_t x = px(c), y = py(c);
    if (!realized(o.sigma(id), {c.first + 1, c.second}))
      dashed(x + cell, y, x + cell, y + cell, x + cell - 4, y + cell / 2 + 4,
             "end", o.sigma(id));
    if (!realized(o.tau(id), {c.first, c.second + 1}))
      dashed(x, y, x + cell, y, x + cell / 2, y + 12, "middle", o.tau(id));
    if (!realized(o.sigma_inv(id), {c.first - 1, c.second}))
      dashed(x, y, x, y + cell, x + 4, y + cell / 2 + 4, "start",
             o.sigma_inv(id));
    if (!realized(o.tau_inv(id), {c.first, c.second - 1}))
      dashed(x, y + cell, x + cell, y + cell, x + cell / 2, y + cell - 6,
             "middle", o.tau_inv(id));
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::map<SquareId, GridCell> layout_cells(const Origami& o) {
  if (!o.is_finite())
    throw Error("drawing a countable origami needs an explicit ball window");
  std::vector<SquareId> squares(static_cast<std::size_t>(o.size()));
  for (SquareId i = 1; i <= o.size(); ++i)
    squares[static_cast<std::size_t>(i - 1)] = i;
  return layout(o, squares, 1);
}

std::map<SquareId, GridCell> layout_cells(const Origami& o,
                                          const Ball& window) {
  return layout(o, window.squares, window.base);
}

std::string render_svg(const Origami& o) { return render(o, layout_cells(o)); }

std::string render_svg(const Origami& o, const Ball& window) {
  return render(o, layout_cells(o, window));
}

}  // namespace origami
