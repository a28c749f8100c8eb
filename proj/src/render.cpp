#include "catwalk/render.hpp"

#include <algorithm>
#include <sstream>

namespace catwalk {

std::string render_ascii(const Path& p) {
  if (p.empty()) return "\n";
  const std::vector<int> h = p.heights();
  const int height = std::max(1, p.max_height());
  bool axis_flats = false;
  {
    int level = 0;
    for (const Step& s : p.steps) {
      if (s.kind == StepKind::flat && level == 0) axis_flats = true;
      level += s.rise();
    }
  }

  const int rows = height + (axis_flats ? 1 : 0);
  std::vector<std::string> grid(static_cast<std::size_t>(rows),
                                std::string(p.size(), ' '));
  // grid[r] is the cell row [r, r+1); row index -1 (the axis row for flats
  // at level 0) is stored behind the others when present.
  auto cell = [&](int row, std::size_t col) -> char& {
    return grid[static_cast<std::size_t>(row + (axis_flats ? 1 : 0))][col];
  };

  int level = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Step& s = p.steps[k];
    switch (s.kind) {
      case StepKind::up:
        cell(level, k) = '/';
        break;
      case StepKind::down:
        cell(level - 1, k) = '\\';
        break;
      case StepKind::flat:
        cell(level - 1, k) = '_';
        break;
      case StepKind::catastrophe:
        for (int r = 0; r < level; ++r) cell(r, k) = '\\';
        break;
    }
    level += s.rise();
  }

  std::string out;
  for (int r = rows - 1; r >= 0; --r) {
    std::string row = grid[static_cast<std::size_t>(r)];
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const Path& p) {
  constexpr int kScale = 20;
  constexpr int kMargin = 10;
  const int height = std::max(1, p.max_height());
  const int width = std::max(1, static_cast<int>(p.size()));
  const int w = width * kScale + 2 * kMargin;
  const int hpx = height * kScale + 2 * kMargin;
  auto px = [&](int x) { return kMargin + x * kScale; };
  auto py = [&](int y) { return kMargin + (height - y) * kScale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << hpx << "\" viewBox=\"0 0 " << w << " " << hpx
      << "\">\n";
  svg << "  <g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int x = 0; x <= width; ++x) {
    svg << "    <line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\""
        << px(x) << "\" y2=\"" << py(height) << "\"/>\n";
  }
  for (int y = 0; y <= height; ++y) {
    svg << "    <line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\""
        << px(width) << "\" y2=\"" << py(y) << "\"/>\n";
  }
  svg << "  </g>\n";
  svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\""
      << px(width) << "\" y2=\"" << py(0)
      << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";

  if (!p.empty()) {
    svg << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" "
           "points=\"";
    svg << px(0) << "," << py(0);
    int level = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      level += p.steps[k].rise();
      svg << " " << px(static_cast<int>(k) + 1) << "," << py(level);
    }
    svg << "\"/>\n";
    level = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const Step& s = p.steps[k];
      if (s.kind == StepKind::catastrophe) {
        svg << "  <text x=\"" << px(static_cast<int>(k)) + kScale / 2
            << "\" y=\"" << py(level) - 4
            << "\" font-size=\"12\" font-family=\"monospace\">D_" << s.drop
            << "</text>\n";
      }
      level += s.rise();
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace catwalk
