#pragma once

#include <string>
#include <vector>

#include "harmcurv/curvature.hpp"
#include "harmcurv/poly.hpp"
#include "harmcurv/topology.hpp"

namespace harmcurv::svg {

struct Segment {
  Complex a, b;
};

// Contour of Re g = level on the field's lattice. Saddle squares are resolved
// by the sign of Re g at the square's centre.
std::vector<Segment> marching_squares(const ComplexPoly& g, const LevelField& field, double level);

struct Scene {
  std::vector<std::vector<Segment>> contours;
  std::vector<Complex> marks;
};

// 800x800 document: curvature heatmap (K = 0 white, grid minimum darkest),
// then contours, then marks.
std::string render(const CurvatureGrid& grid, const Scene& scene = {});

}  // namespace harmcurv::svg
