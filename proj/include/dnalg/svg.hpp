#pragma once

#include "dnalg/diagram.hpp"
#include "dnalg/word.hpp"

#include <optional>
#include <sstream>
#include <string>

namespace dnalg {

namespace detail {

/// Deterministic SVG 1.1 rendering of a generator word, optionally closed.
/// Fixed integer grid: strand i at x = 40 + 40i, letter r spans
/// y = 40 + 40r .. 80 + 40r.  Under-strands break at the crossing point;
/// smoothers render as cap/cup arcs; closure arcs are drawn outside the
/// braid box.  Identical input yields byte-identical output.
inline std::string svg_render(const GenWord &w, std::optional<Closure> closure,
                              const PlatMarks *marks) {
  if (w.has_affine_letter()) throw DiagramError("affine letters cannot be rendered");
  int n = w.strand_count();
  if (closure == Closure::Plat && n % 2 != 0)
    throw DiagramError("plat closure requires an even strand count");
  int rows = static_cast<int>(w.size());
  auto X = [](int i) { return 40 + 40 * i; };
  int ytop = 40, ybot = 40 + 40 * (rows == 0 ? 1 : rows);
  int width = X(n - 1) + 40 + (closure == Closure::Trace ? 20 * n + 20 : 0);
  int height = ybot + 40;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  os << "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";

  auto line = [&os](int x1, int y1, int x2, int y2) {
    os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
       << "\"/>\n";
  };
  auto arc = [&os](int x1, int y, int x2, bool down) {
    int r = (x2 - x1) / 2;
    os << "<path d=\"M " << x1 << " " << y << " A " << r << " " << r << " 0 0 "
       << (down ? 0 : 1) << " " << x2 << " " << y << "\"/>\n";
  };

  if (rows == 0)
    for (int i = 0; i < n; ++i) line(X(i), ytop, X(i), ybot);
  for (int r = 0; r < rows; ++r) {
    const Generator &g = w.letters()[r];
    int y = 40 + 40 * r;
    for (int i = 0; i < n; ++i)
      if (i != g.index - 1 && i != g.index) line(X(i), y, X(i), y + 40);
    int xa = X(g.index - 1), xb = X(g.index);
    if (g.kind == Generator::Kind::E) {
      arc(xa, y, xb, true);       // cap below the top points
      arc(xa, y + 40, xb, false); // cup above the bottom points
    } else {
      bool tl_br_under = g.kind == Generator::Kind::Sigma;
      int mx = (xa + xb) / 2, my = y + 20;
      if (tl_br_under) {
        line(xb, y, xa, y + 40);
        line(xa, y, mx - 6, my - 6);
        line(mx + 6, my + 6, xb, y + 40);
      } else {
        line(xa, y, xb, y + 40);
        line(xb, y, mx + 6, my - 6);
        line(mx - 6, my + 6, xa, y + 40);
      }
    }
  }

  if (closure == Closure::Plat) {
    for (int j = 0; 2 * j < n; ++j) {
      arc(X(2 * j), ytop, X(2 * j + 1), false);
      arc(X(2 * j), ybot, X(2 * j + 1), true);
    }
  } else if (closure == Closure::Trace) {
    for (int i = 0; i < n; ++i) {
      int xr = X(n - 1) + 20 + 20 * (n - i);
      os << "<path d=\"M " << X(i) << " " << ybot << " L " << X(i) << " " << ybot + 10 + 5 * i
         << " L " << xr << " " << ybot + 10 + 5 * i << " L " << xr << " " << ytop - 10 - 5 * i
         << " L " << X(i) << " " << ytop - 10 - 5 * i << " L " << X(i) << " " << ytop
         << "\"/>\n";
    }
  }
  os << "</g>\n";

  if (marks && closure == Closure::Plat) {
    os << "<g font-family=\"monospace\" font-size=\"14\" fill=\"black\">\n";
    for (const auto &[j, label] : marks->bottom)
      os << "<text x=\"" << (X(2 * j) + X(2 * j + 1)) / 2 - 4 << "\" y=\"" << ybot + 32 << "\">"
         << label << "</text>\n";
    for (const auto &[j, label] : marks->top)
      os << "<text x=\"" << (X(2 * j) + X(2 * j + 1)) / 2 - 4 << "\" y=\"" << ytop - 24 << "\">"
         << label << "</text>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace detail

inline std::string emit_svg(const GenWord &w, Closure closure, const PlatMarks *marks = nullptr) {
  return detail::svg_render(w, closure, marks);
}

/// Open braid rendering (no closure arcs).
inline std::string emit_svg_braid(const GenWord &w) {
  return detail::svg_render(w, std::nullopt, nullptr);
}

} // namespace dnalg
