#include "selt/render.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace selt {

namespace {

// Draws a shifted grid whose cells come from `cell(row, col)`.
std::string grid(const StrictPartition& shape,
                 const std::function<std::string(int, int)>& cell) {
  size_t width = 1;
  for (const Box& b : shape.boxes()) width = std::max(width, cell(b.row, b.col).size());
  std::ostringstream os;
  for (int r = 1; r <= shape.length(); ++r) {
    std::string line(static_cast<size_t>(r - 1) * (width + 1), ' ');
    for (int c = r; c < r + shape.part(r); ++c) {
      const std::string s = cell(r, c);
      line += std::string(width - s.size(), ' ') + s;
      if (c + 1 < r + shape.part(r)) line += ' ';
    }
    os << line << '\n';
  }
  return os.str();
}

}  // namespace

std::string render_ascii(const EdgeTableau& t) {
  const SkewShape& shape = t.shape();
  std::ostringstream os;
  if (shape.outer().empty()) {
    os << "(empty)\n";
  } else {
    os << grid(shape.outer(), [&](int r, int c) -> std::string {
      if (!shape.in_skew(r, c)) return ".";
      const int v = t.at(r, c);
      return v == 0 ? "_" : std::to_string(v);
    });
  }
  for (int i = 1; i <= std::max(t.edge_slots(), shape.edge_count()); ++i) {
    if (t.edge(i).empty()) continue;
    os << "E" << i << ":";
    for (int v : t.edge(i)) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

std::string render_ascii(const ExcitedDiagram& d) {
  if (d.ambient.empty()) return "(empty)\n";
  return grid(d.ambient, [&](int r, int c) -> std::string {
    return d.pluses.contains({r, c}) ? "+" : ".";
  });
}

std::string render_ascii(const Shading& s) {
  const Staircase p = Staircase::make(s.n, s.m);
  if (s.m == 0) return "(empty)\n";
  return grid(rho_nm(s.n, s.m), [&](int r, int c) {
    const std::string v = std::to_string(p.entry(r, c));
    return s.shaded.contains({c, r}) ? v + "*" : v;
  });
}

}  // namespace selt
