#include "harmcurv/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "harmcurv/errors.hpp"

namespace harmcurv {

namespace {

constexpr int kSearchGrid = 64;
constexpr int kCircleSamples = 32;
constexpr int kCircleCount = 5;
constexpr double kFirstRadius = 10.0;

struct Curvatures {
  PolyJet p, q;

  double kp(Complex z) const { return value(p, z); }
  double kq(Complex z) const { return value(q, z); }
  Witness at(Complex z) const { return {z, kp(z), kq(z)}; }

  static double value(const PolyJet& j, Complex z) {
    return curvature_from(eval(j.df(), z), eval(j.d2f(), z));
  }
};

double gap(const Witness& w) { return std::abs(w.k_p - w.k_q); }

Witness best_on_lattice(const Curvatures& k, const Lattice& lat) {
  Witness best = k.at(lat.point(0));
  for (std::size_t idx = 1; idx < lat.size(); ++idx) {
    const Witness w = k.at(lat.point(idx));
    if (gap(w) > gap(best)) best = w;
  }
  return best;
}

// Coarse grid search, then one refinement around the best cell.
Witness grid_witness(const Curvatures& k, const Domain2D& domain) {
  const Lattice coarse{domain, kSearchGrid, kSearchGrid};
  const Witness first = best_on_lattice(k, coarse);
  const Domain2D zoom{first.point.real() - coarse.dx(), first.point.real() + coarse.dx(),
                      first.point.imag() - coarse.dy(), first.point.imag() + coarse.dy()};
  const Witness refined = best_on_lattice(k, Lattice{zoom, kSearchGrid, kSearchGrid});
  return gap(refined) > gap(first) ? refined : first;
}

double relative_gap(const Witness& w) {
  const double scale = std::max(std::abs(w.k_p), std::abs(w.k_q));
  return scale > 0.0 ? gap(w) / scale : 0.0;
}

// Curvatures of different degrees separate at large |z|.
Witness circle_witness(const Curvatures& k, const Tolerances& tol) {
  Witness best = k.at(kFirstRadius);
  for (int j = 0; j < kCircleCount; ++j) {
    const double radius = kFirstRadius * std::ldexp(1.0, j);
    for (int s = 0; s < kCircleSamples; ++s) {
      const Witness w = k.at(std::polar(radius, 2.0 * std::numbers::pi * s / kCircleSamples));
      if (relative_gap(w) > tol.witness_relative) return w;
      if (relative_gap(w) > relative_gap(best)) best = w;
    }
  }
  return best;
}

}  // namespace

EquivalenceVerdict decide_equal_curvature(const ComplexPoly& p, const ComplexPoly& q,
                                          const Tolerances& tol) {
  EquivalenceVerdict verdict;
  const int dp = p.degree(), dq = q.degree();

  if (dp <= 1 && dq <= 1) {
    verdict.equivalent = true;
    verdict.flat_case = true;
    return verdict;
  }

  const Curvatures k{PolyJet(p), PolyJet(q)};
  if (dp <= 1 || dq <= 1) {
    const ComplexPoly& curved = dp <= 1 ? q : p;
    verdict.witness = grid_witness(k, default_domain(curved, tol));
    return verdict;
  }
  if (dp != dq) {
    verdict.witness = circle_witness(k, tol);
    return verdict;
  }

  const Complex alpha = q.leading() / p.leading();
  const ComplexPoly diff = q - affine_map(p, alpha, 0.0);
  double residual = 0.0;
  for (int j = 1; j <= diff.degree(); ++j) residual = std::max(residual, std::abs(diff.coeff(j)));
  const double scale = std::max(std::abs(alpha) * p.max_coeff_magnitude(), q.max_coeff_magnitude());

  if (std::abs(std::abs(alpha) - 1.0) <= tol.unit_modulus &&
      residual <= tol.coefficient_match * scale) {
    verdict.equivalent = true;
    verdict.certificate = Certificate{alpha, diff.coeff(0), residual};
    return verdict;
  }
  verdict.witness = grid_witness(k, default_domain(p, q, tol));
  return verdict;
}

CurvatureComparison numeric_curvature_compare(const ComplexPoly& p, const ComplexPoly& q,
                                              const Domain2D& domain, int n,
                                              const Tolerances& tol) {
  const CurvatureGrid gp = curvature_grid(p, domain, n, n, tol);
  const CurvatureGrid gq = curvature_grid(q, domain, n, n, tol);
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t idx = 0; idx < gp.values.size(); ++idx) {
    const double d = std::abs(gp.values[idx] - gq.values[idx]);
    if (d > best) {
      best = d;
      arg = idx;
    }
  }
  return {best, gp.lattice().point(arg)};
}

std::vector<LoopSample> loop_scan(const ComplexPoly& p, int num_samples, const Domain2D& domain,
                                  int n, const Tolerances& tol) {
  if (num_samples < 4) throw InputError("loop scan needs at least 4 samples");
  if (p.degree() < 2) throw InputError("insufficient degree");

  const CurvatureGrid base = curvature_grid(p, domain, n, n, tol);
  std::vector<LoopSample> out;
  out.reserve(static_cast<std::size_t>(num_samples));
  for (int k = 0; k < num_samples; ++k) {
    LoopSample s;
    s.t = 2.0 * std::numbers::pi * k / num_samples;
    s.poly = rotate(p, s.t);
    const CurvatureGrid moved = curvature_grid(s.poly, domain, n, n, tol);
    for (std::size_t idx = 0; idx < base.values.size(); ++idx) {
      s.curvature_deviation =
          std::max(s.curvature_deviation, std::abs(moved.values[idx] - base.values[idx]));
    }
    s.signature = fiber_signature(p, PartSelector::rotated(s.t), domain, n, tol);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace harmcurv
