#include "finfish/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace finfish {

namespace {

struct Layout {
  // tilted coordinates per cell: x = p + q (rightward), y = p - q (upward)
  std::vector<std::pair<int, int>> xy;
  std::map<std::pair<int, int>, int> multiplicity;
  std::vector<SideRef> fin_sides;
  int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
};

Layout lay_out(const FishComplex& f) {
  Layout l;
  PlanePlacement pl = project(f);
  for (const auto& [p, q] : pl.pos) {
    std::pair<int, int> xy{p + q, p - q};
    l.xy.push_back(xy);
    ++l.multiplicity[xy];
    l.xmin = std::min(l.xmin, xy.first);
    l.xmax = std::max(l.xmax, xy.first);
    l.ymin = std::min(l.ymin, xy.second);
    l.ymax = std::max(l.ymax, xy.second);
  }
  l.fin_sides = fin(f).sides;
  return l;
}

}  // namespace

std::string render_svg(const FishComplex& f) {
  Layout l = lay_out(f);
  const int S = 24;
  auto X = [&](int x) { return (x - l.xmin + 1) * S; };
  auto Y = [&](int y) { return (l.ymax - y + 1) * S; };
  int w = (l.xmax - l.xmin + 2) * S;
  int h = (l.ymax - l.ymin + 2) * S;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h
      << "\" width=\"" << w << "\" height=\"" << h << "\">\n"
      << "<style>.cell{fill:#e8eef8;stroke:#445;stroke-width:1}"
      << ".fin{stroke:#c22;stroke-width:3;stroke-linecap:round}"
      << ".badge{font:12px monospace;text-anchor:middle;fill:#222}</style>\n";

  for (const auto& entry : l.multiplicity) {
    int cx = X(entry.first.first), cy = Y(entry.first.second);
    out << "<polygon class=\"cell\" points=\"" << cx - S << ',' << cy << ' ' << cx << ','
        << cy - S << ' ' << cx + S << ',' << cy << ' ' << cx << ',' << cy + S << "\"/>\n";
  }
  for (const SideRef& s : l.fin_sides) {
    auto [x, y] = l.xy[static_cast<size_t>(s.cell)];
    int cx = X(x), cy = Y(y);
    // lower-left edge: left vertex to bottom vertex; lower-right: bottom to right
    if (s.kind == SideKind::LL)
      out << "<line class=\"fin\" x1=\"" << cx - S << "\" y1=\"" << cy << "\" x2=\"" << cx
          << "\" y2=\"" << cy + S << "\"/>\n";
    else
      out << "<line class=\"fin\" x1=\"" << cx << "\" y1=\"" << cy + S << "\" x2=\""
          << cx + S << "\" y2=\"" << cy << "\"/>\n";
  }
  for (const auto& [xy, count] : l.multiplicity) {
    if (count < 2) continue;
    out << "<text class=\"badge\" x=\"" << X(xy.first) << "\" y=\"" << Y(xy.second) + 4
        << "\">x" << count << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const FishComplex& f) {
  Layout l = lay_out(f);
  int rows = l.ymax - l.ymin + 2;
  int cols = 2 * (l.xmax - l.xmin) + 4;
  std::vector<std::string> canvas(static_cast<size_t>(rows), std::string(cols, ' '));
  auto top_row = [&](int y) { return l.ymax - y; };
  auto left_col = [&](int x) { return 2 * (x - l.xmin); };

  for (const auto& [xy, count] : l.multiplicity) {
    int r = top_row(xy.second), c = left_col(xy.first);
    canvas[r][c] = '/';
    canvas[r][c + 3] = '\\';
    canvas[r + 1][c] = '\\';
    canvas[r + 1][c + 3] = '/';
    if (count > 1) {
      std::string badge = count < 100 ? std::to_string(count) : "**";
      for (size_t i = 0; i < badge.size() && i < 2; ++i) canvas[r][c + 1 + i] = badge[i];
    }
  }
  for (const SideRef& s : l.fin_sides) {
    auto [x, y] = l.xy[static_cast<size_t>(s.cell)];
    int r = top_row(y) + 1, c = left_col(x);
    canvas[r][s.kind == SideKind::LL ? c : c + 3] = '#';
  }

  std::string out;
  for (std::string& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace finfish
