#pragma once

#include <cstddef>
#include <vector>

#include "harmcurv/poly.hpp"
#include "harmcurv/tolerances.hpp"

namespace harmcurv {

// Which harmonic function of f = u + iv is meant.
enum class Part { Real, Imag };

// Polynomial whose real part is the selected part (v = Re(-i f)).
ComplexPoly part_poly(const ComplexPoly& p, Part part);

struct Domain2D {
  double xmin, xmax, ymin, ymax;

  // Throws InputError unless finite with xmin < xmax and ymin < ymax.
  void validate() const;
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
};

// Bounding box of the roots of P, P' and P'', grown on every side by half its
// diagonal plus 1.
Domain2D default_domain(const ComplexPoly& p, const Tolerances& tol = {});
Domain2D default_domain(const ComplexPoly& p, const ComplexPoly& q, const Tolerances& tol = {});

// Cell-centre lattice shared by curvature grids and level-set extraction.
// Sample (i, j) sits at index j * nx + i.
struct Lattice {
  Domain2D domain;
  int nx, ny;

  double x(int i) const { return domain.xmin + (i + 0.5) * domain.width() / nx; }
  double y(int j) const { return domain.ymin + (j + 0.5) * domain.height() / ny; }
  double dx() const { return domain.width() / nx; }
  double dy() const { return domain.height() / ny; }
  std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
  }
  Complex point(std::size_t idx) const {
    return {x(static_cast<int>(idx % static_cast<std::size_t>(nx))),
            y(static_cast<int>(idx / static_cast<std::size_t>(nx)))};
  }
  // Cell containing z, or -1 when z is outside the domain.
  long cell_of(Complex z) const;
};

struct CurvatureGrid {
  Domain2D domain;
  int nx = 0, ny = 0;
  std::vector<double> values;  // row-major, y outer
  double min_value = 0.0;
  double max_value = 0.0;

  Lattice lattice() const { return {domain, nx, ny}; }
};

struct FirstForm {
  double E, F, G;
};

// -|f''|^2 / (1 + |f'|^2)^2 from the two derivative values. Zero is +0.
double curvature_from(Complex fp, Complex fpp);

// -|P''(z)|^2 / (1 + |P'(z)|^2)^2
double curvature_at(const ComplexPoly& p, Complex z);

// (w_xx w_yy - w_xy^2) / (1 + w_x^2 + w_y^2)^2 built from the partials of the
// selected part.
double curvature_hessian_at(const ComplexPoly& p, double x, double y, Part part = Part::Real);

// Throws InputError for nx or ny < 2 and for grids above tol.grid_cap samples.
CurvatureGrid curvature_grid(const ComplexPoly& p, const Domain2D& domain, int nx, int ny,
                             const Tolerances& tol = {});

// Zeros of P''. For degree <= 1 the whole graph is a plane and identically_flat
// is set instead.
struct FlatSet {
  bool identically_flat = false;
  RootSet points;
};

FlatSet flat_points(const ComplexPoly& p, const Tolerances& tol = {});

FirstForm first_form_at(const ComplexPoly& p, Part part, double x, double y);

}  // namespace harmcurv
