#include "harmcurv/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "harmcurv/errors.hpp"

namespace harmcurv {

ComplexPoly part_poly(const ComplexPoly& p, Part part) {
  return part == Part::Real ? p : affine_map(p, Complex{0.0, -1.0}, 0.0);
}

void Domain2D::validate() const {
  if (!(std::isfinite(xmin) && std::isfinite(xmax) && std::isfinite(ymin) && std::isfinite(ymax))) {
    throw InputError("domain bounds must be finite");
  }
  if (!(xmin < xmax && ymin < ymax)) throw InputError("domain must satisfy xmin < xmax, ymin < ymax");
}

long Lattice::cell_of(Complex z) const {
  const double fx = (z.real() - domain.xmin) / dx();
  const double fy = (z.imag() - domain.ymin) / dy();
  if (!(fx >= 0.0 && fy >= 0.0 && fx <= nx && fy <= ny)) return -1;
  const int i = std::min(static_cast<int>(fx), nx - 1);
  const int j = std::min(static_cast<int>(fy), ny - 1);
  return static_cast<long>(index(i, j));
}

namespace {

void collect_roots(const ComplexPoly& p, const Tolerances& tol, std::vector<Complex>& out) {
  if (p.degree() < 1) return;
  for (const Root& r : roots(p, tol).roots) out.push_back(r.location);
}

Domain2D box_around(const std::vector<Complex>& pts) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  if (!pts.empty()) {
    xmin = xmax = pts.front().real();
    ymin = ymax = pts.front().imag();
    for (const Complex& z : pts) {
      xmin = std::min(xmin, z.real());
      xmax = std::max(xmax, z.real());
      ymin = std::min(ymin, z.imag());
      ymax = std::max(ymax, z.imag());
    }
  }
  const double grow = 0.5 * std::hypot(xmax - xmin, ymax - ymin) + 1.0;
  return {xmin - grow, xmax + grow, ymin - grow, ymax + grow};
}

void collect_structure(const ComplexPoly& p, const Tolerances& tol, std::vector<Complex>& pts) {
  const ComplexPoly dp = derivative(p);
  collect_roots(p, tol, pts);
  collect_roots(dp, tol, pts);
  collect_roots(derivative(dp), tol, pts);
}

}  // namespace

Domain2D default_domain(const ComplexPoly& p, const Tolerances& tol) {
  std::vector<Complex> pts;
  collect_structure(p, tol, pts);
  return box_around(pts);
}

Domain2D default_domain(const ComplexPoly& p, const ComplexPoly& q, const Tolerances& tol) {
  std::vector<Complex> pts;
  collect_structure(p, tol, pts);
  collect_structure(q, tol, pts);
  return box_around(pts);
}

double curvature_from(Complex fp, Complex fpp) {
  const double denom = 1.0 + std::norm(fp);
  return 0.0 - std::norm(fpp) / (denom * denom);
}

double curvature_at(const ComplexPoly& p, Complex z) {
  const ComplexPoly dp = derivative(p);
  return curvature_from(eval(dp, z), eval(derivative(dp), z));
}

double curvature_hessian_at(const ComplexPoly& p, double x, double y, Part part) {
  const HarmonicJet j = harmonic_jet(part_poly(p, part), x, y);
  const double det = j.uxx * j.uyy - j.uxy * j.uxy;
  const double denom = 1.0 + j.ux * j.ux + j.uy * j.uy;
  return det / (denom * denom);
}

CurvatureGrid curvature_grid(const ComplexPoly& p, const Domain2D& domain, int nx, int ny,
                             const Tolerances& tol) {
  domain.validate();
  if (nx < 2 || ny < 2) throw InputError("curvature grid needs nx, ny >= 2");
  const Lattice lat{domain, nx, ny};
  if (lat.size() > tol.grid_cap) throw InputError("curvature grid exceeds sample cap");

  const ComplexPoly dp = derivative(p);
  const ComplexPoly d2p = derivative(dp);
  CurvatureGrid g{domain, nx, ny, std::vector<double>(lat.size()), 0.0, 0.0};
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Complex z{lat.x(i), lat.y(j)};
      g.values[lat.index(i, j)] = curvature_from(eval(dp, z), eval(d2p, z));
    }
  }
  const auto [lo, hi] = std::minmax_element(g.values.begin(), g.values.end());
  g.min_value = *lo;
  g.max_value = *hi;
  return g;
}

FlatSet flat_points(const ComplexPoly& p, const Tolerances& tol) {
  FlatSet out;
  if (p.degree() <= 1) {
    out.identically_flat = true;
    return out;
  }
  const ComplexPoly d2p = derivative(derivative(p));
  if (d2p.degree() >= 1) out.points = roots(d2p, tol);
  return out;
}

FirstForm first_form_at(const ComplexPoly& p, Part part, double x, double y) {
  const HarmonicJet j = harmonic_jet(part_poly(p, part), x, y);
  return {1.0 + j.ux * j.ux, j.ux * j.uy, 1.0 + j.uy * j.uy};
}

}  // namespace harmcurv
