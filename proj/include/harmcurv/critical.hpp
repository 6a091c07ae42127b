#pragma once

#include <vector>

#include "harmcurv/poly.hpp"
#include "harmcurv/tolerances.hpp"

namespace harmcurv {

enum class CriticalKind { NonDegenerateSaddle, Degenerate };

const char* to_string(CriticalKind kind);

// A zero of f'. For harmonic u this is a critical point of both u and v; it is
// degenerate exactly when f'' vanishes there.
struct CriticalPoint {
  Complex location;
  double u_value = 0.0;
  double v_value = 0.0;
  CriticalKind kind = CriticalKind::NonDegenerateSaddle;
  Complex fpp;
  int multiplicity = 1;
};

std::vector<CriticalPoint> critical_points(const ComplexPoly& p, const Tolerances& tol = {});

// Extreme points in counter-clockwise order. One vertex for a point hull, two
// for a segment.
struct ConvexHull2D {
  std::vector<Complex> vertices;
};

// Andrew's monotone chain. Throws InputError for empty input.
ConvexHull2D convex_hull(const std::vector<Complex>& points, const Tolerances& tol = {});

double distance_to_hull(Complex p, const ConvexHull2D& hull);
bool point_in_hull(Complex p, const ConvexHull2D& hull, double slack);

struct GaussLucasReport {
  ConvexHull2D hull_of_f_roots;
  ConvexHull2D hull_of_fprime_roots;
  bool fprime_roots_contained = true;
  bool fsecond_roots_contained_in_delta = true;
  double max_violation_distance = 0.0;
};

// Checks roots(P') against hull(roots(P)) and roots(P'') against
// hull(roots(P')). Throws InputError for degree < 2.
GaussLucasReport gauss_lucas_report(const ComplexPoly& p, const Tolerances& tol = {});

// Distinct zeros of P'' number at most deg P - 2. Throws InputError for degree < 2.
bool flat_set_bound_check(const ComplexPoly& p, const Tolerances& tol = {});

}  // namespace harmcurv
