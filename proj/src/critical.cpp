#include "harmcurv/critical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "harmcurv/curvature.hpp"
#include "harmcurv/errors.hpp"

namespace harmcurv {

const char* to_string(CriticalKind kind) {
  return kind == CriticalKind::NonDegenerateSaddle ? "NonDegenerateSaddle" : "Degenerate";
}

std::vector<CriticalPoint> critical_points(const ComplexPoly& p, const Tolerances& tol) {
  std::vector<CriticalPoint> out;
  if (p.degree() < 2) return out;

  const PolyJet jet(p);
  const double degeneracy = tol.degeneracy * (1.0 + jet.d2f().max_coeff_magnitude());
  for (const Root& r : roots(jet.df(), tol).roots) {
    CriticalPoint cp;
    cp.location = r.location;
    cp.multiplicity = r.multiplicity;
    const HarmonicJet j = jet.at(r.location.real(), r.location.imag());
    cp.u_value = j.u;
    cp.v_value = j.v;
    cp.fpp = eval(jet.d2f(), r.location);
    cp.kind = std::abs(cp.fpp) <= degeneracy ? CriticalKind::Degenerate
                                             : CriticalKind::NonDegenerateSaddle;
    out.push_back(cp);
  }
  return out;
}

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

ConvexHull2D convex_hull(const std::vector<Complex>& points, const Tolerances& tol) {
  if (points.empty()) throw InputError("convex hull of an empty point set");

  std::vector<Complex> pts = points;
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return {pts};

  double scale = 0.0;
  for (const Complex& z : pts) scale = std::max(scale, std::abs(z - pts.front()));
  const double eps = tol.collinearity * scale * scale;

  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Complex& z : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], z) <= eps) --k;
    hull[k++] = z;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= eps) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  if (hull.size() <= 2) {
    // Collinear input: the chain collapses to the two extreme points.
    Complex a = pts.front(), b = pts.back();
    if (std::abs(b - a) <= std::sqrt(eps)) return {{a}};
    return {{a, b}};
  }
  return {hull};
}

double distance_to_hull(Complex p, const ConvexHull2D& hull) {
  const auto& v = hull.vertices;
  if (v.size() == 1) return std::abs(p - v[0]);
  if (v.size() == 2) return distance_to_segment(p, v[0], v[1]);

  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex a = v[i], b = v[(i + 1) % v.size()];
    if (cross(a, b, p) < 0.0) inside = false;
    best = std::min(best, distance_to_segment(p, a, b));
  }
  return inside ? 0.0 : best;
}

bool point_in_hull(Complex p, const ConvexHull2D& hull, double slack) {
  return distance_to_hull(p, hull) <= slack;
}

GaussLucasReport gauss_lucas_report(const ComplexPoly& p, const Tolerances& tol) {
  if (p.degree() < 2) throw InputError("insufficient degree");

  const ComplexPoly dp = derivative(p);
  const ComplexPoly d2p = derivative(dp);
  const std::vector<Complex> f_roots = roots(p, tol).locations();
  const std::vector<Complex> fp_roots = roots(dp, tol).locations();

  GaussLucasReport rep;
  rep.hull_of_f_roots = convex_hull(f_roots, tol);
  rep.hull_of_fprime_roots = convex_hull(fp_roots, tol);

  double worst_first = 0.0;
  for (const Complex& z : fp_roots) {
    worst_first = std::max(worst_first, distance_to_hull(z, rep.hull_of_f_roots));
  }
  double worst_second = 0.0;
  if (d2p.degree() >= 1) {
    for (const Complex& z : roots(d2p, tol).locations()) {
      worst_second = std::max(worst_second, distance_to_hull(z, rep.hull_of_fprime_roots));
    }
  }
  rep.fprime_roots_contained = worst_first <= tol.containment_slack;
  rep.fsecond_roots_contained_in_delta = worst_second <= tol.containment_slack;
  rep.max_violation_distance = std::max(worst_first, worst_second);
  return rep;
}

bool flat_set_bound_check(const ComplexPoly& p, const Tolerances& tol) {
  if (p.degree() < 2) throw InputError("insufficient degree");
  const FlatSet flat = flat_points(p, tol);
  return static_cast<int>(flat.points.distinct()) <= p.degree() - 2;
}

}  // namespace harmcurv
