#include "harmcurv/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

namespace harmcurv::svg {

namespace {

constexpr int kCanvas = 800;
constexpr int kMaxHeatCells = 200;

Complex crossing(Complex pa, double va, Complex pb, double vb, double level) {
  const double t = (level - va) / (vb - va);
  return pa + t * (pb - pa);
}

}  // namespace

std::vector<Segment> marching_squares(const ComplexPoly& g, const LevelField& field, double level) {
  const Lattice& lat = field.lattice;
  std::vector<Segment> out;
  for (int j = 0; j + 1 < lat.ny; ++j) {
    for (int i = 0; i + 1 < lat.nx; ++i) {
      // Corners counter-clockwise from bottom-left.
      const std::array<Complex, 4> p{Complex{lat.x(i), lat.y(j)}, Complex{lat.x(i + 1), lat.y(j)},
                                     Complex{lat.x(i + 1), lat.y(j + 1)},
                                     Complex{lat.x(i), lat.y(j + 1)}};
      const std::array<double, 4> v{field.values[lat.index(i, j)], field.values[lat.index(i + 1, j)],
                                    field.values[lat.index(i + 1, j + 1)],
                                    field.values[lat.index(i, j + 1)]};
      std::array<bool, 4> above{};
      for (int k = 0; k < 4; ++k) above[k] = v[k] > level;

      // Edge e joins corners e and e+1.
      std::array<Complex, 4> hit{};
      std::array<int, 4> edges{};
      int count = 0;
      for (int e = 0; e < 4; ++e) {
        const int f = (e + 1) % 4;
        if (above[e] != above[f]) {
          hit[e] = crossing(p[e], v[e], p[f], v[f], level);
          edges[count++] = e;
        }
      }
      if (count == 2) {
        out.push_back({hit[edges[0]], hit[edges[1]]});
      } else if (count == 4) {
        const Complex centre = 0.5 * (p[0] + p[2]);
        const bool centre_above = eval(g, centre).real() > level;
        // Cut off the two corners whose side the centre is not on.
        const int first = (above[0] == centre_above) ? 1 : 0;
        for (const int corner : {first, first + 2}) {
          const int before = (corner + 3) % 4;
          out.push_back({hit[before], hit[corner]});
        }
      }
    }
  }
  return out;
}

namespace {

std::string palette(double s) {
  // White to deep blue, monotone in s.
  s = std::clamp(s, 0.0, 1.0);
  const auto mix = [s](int lo, int hi) {
    return static_cast<int>(std::lround(lo + (hi - lo) * std::sqrt(s)));
  };
  return fmt::format("#{:02x}{:02x}{:02x}", mix(255, 8), mix(255, 29), mix(255, 88));
}

}  // namespace

std::string render(const CurvatureGrid& grid, const Scene& scene) {
  const Domain2D& d = grid.domain;
  const auto px = [&](double x) { return (x - d.xmin) / d.width() * kCanvas; };
  const auto py = [&](double y) { return (d.ymax - y) / d.height() * kCanvas; };

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} "
      "{0}\">\n",
      kCanvas);

  const int cols = std::min(grid.nx, kMaxHeatCells);
  const int rows = std::min(grid.ny, kMaxHeatCells);
  const double cw = static_cast<double>(kCanvas) / cols;
  const double ch = static_cast<double>(kCanvas) / rows;
  const double darkest = grid.min_value;
  out += "<g shape-rendering=\"crispEdges\">\n";
  for (int r = 0; r < rows; ++r) {
    // Row r of the canvas counts from the top, the grid from the bottom.
    const int j = static_cast<int>((rows - 1 - r + 0.5) * grid.ny / rows);
    int run_start = 0;
    std::string run_colour;
    for (int c = 0; c <= cols; ++c) {
      std::string colour;
      if (c < cols) {
        const int i = static_cast<int>((c + 0.5) * grid.nx / cols);
        const double k = grid.values[static_cast<std::size_t>(j) * static_cast<std::size_t>(grid.nx) +
                                     static_cast<std::size_t>(i)];
        colour = darkest < 0.0 ? palette(k / darkest) : palette(0.0);
      }
      if (c == cols || (c > 0 && colour != run_colour)) {
        out += fmt::format("<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"{}\"/>\n",
                           run_start * cw, r * ch, (c - run_start) * cw, ch, run_colour);
        run_start = c;
      }
      run_colour = colour;
    }
  }
  out += "</g>\n";

  for (const auto& contour : scene.contours) {
    if (contour.empty()) continue;
    out += "<path fill=\"none\" stroke=\"#d95f02\" stroke-width=\"1.5\" d=\"";
    for (const Segment& s : contour) {
      out += fmt::format("M{:.3f} {:.3f}L{:.3f} {:.3f}", px(s.a.real()), py(s.a.imag()),
                         px(s.b.real()), py(s.b.imag()));
    }
    out += "\"/>\n";
  }
  for (const Complex& m : scene.marks) {
    out += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"4\" fill=\"#e7298a\" stroke=\"#000000\"/>\n",
                       px(m.real()), py(m.imag()));
  }
  out += "</svg>\n";
  return out;
}

}  // namespace harmcurv::svg
