#include "harmcurv/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "harmcurv/errors.hpp"

namespace harmcurv {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

ComplexPoly::ComplexPoly() : coeffs_{Complex{0.0}} {}

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  for (const Complex& c : coeffs_) {
    if (!is_finite(c)) throw InputError("non-finite polynomial coefficient");
  }
  trim();
}

ComplexPoly::ComplexPoly(std::initializer_list<Complex> coeffs)
    : ComplexPoly(std::vector<Complex>(coeffs)) {}

ComplexPoly ComplexPoly::monomial(int power, Complex coeff) {
  if (power < 0) throw InputError("negative monomial power");
  std::vector<Complex> c(static_cast<std::size_t>(power) + 1, Complex{0.0});
  c.back() = coeff;
  return ComplexPoly(std::move(c));
}

void ComplexPoly::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Complex ComplexPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

double ComplexPoly::max_coeff_magnitude() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex ComplexPoly::operator()(Complex z) const { return eval(*this, z); }

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
  const int n = std::max(a.degree(), b.degree());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
  return ComplexPoly(std::move(c));
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
  const int n = std::max(a.degree(), b.degree());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
  return ComplexPoly(std::move(c));
}

Complex eval(const ComplexPoly& p, Complex z) {
  if (!is_finite(z)) throw InputError("non-finite evaluation point");
  const auto c = p.coeffs();
  Complex acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

double eval_magnitude(const ComplexPoly& p, Complex z) {
  const auto c = p.coeffs();
  const double r = std::abs(z);
  double acc = std::abs(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * r + std::abs(c[k]);
  return acc;
}

ComplexPoly derivative(const ComplexPoly& p) {
  if (p.degree() == 0) return ComplexPoly{};
  const auto c = p.coeffs();
  std::vector<Complex> d(c.size() - 1);
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = static_cast<double>(k + 1) * c[k + 1];
  return ComplexPoly(std::move(d));
}

ComplexPoly affine_map(const ComplexPoly& p, Complex alpha, Complex beta) {
  std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
  for (Complex& ck : c) ck *= alpha;
  c[0] += beta;
  return ComplexPoly(std::move(c));
}

ComplexPoly rotate(const ComplexPoly& p, double t) {
  if (!std::isfinite(t)) throw InputError("non-finite rotation angle");
  return affine_map(p, Complex{std::cos(t), std::sin(t)}, 0.0);
}

int RootSet::total_multiplicity() const {
  return std::accumulate(roots.begin(), roots.end(), 0,
                         [](int acc, const Root& r) { return acc + r.multiplicity; });
}

std::vector<Complex> RootSet::locations() const {
  std::vector<Complex> out;
  out.reserve(roots.size());
  for (const Root& r : roots) out.push_back(r.location);
  return out;
}

double cauchy_bound(const ComplexPoly& p) {
  const int n = p.degree();
  const Complex lead = p.leading();
  double m = 0.0;
  for (int k = 0; k < n; ++k) m = std::max(m, std::abs(p.coeff(k) / lead));
  return 1.0 + m;
}

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

struct ValueAndSlope {
  Complex value;
  Complex slope;
};

ValueAndSlope horner2(std::span<const Complex> c, Complex z) {
  Complex b = c.back();
  Complex d = 0.0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    d = d * z + b;
    b = b * z + c[k];
  }
  return {b, d};
}

// Acceptable |P(root)|: tol (1 + max|c|) max(1, |z|)^n.
double residual_bound(const ComplexPoly& p, Complex z, double tol) {
  const double r = std::max(1.0, std::abs(z));
  return tol * (1.0 + p.max_coeff_magnitude()) * std::pow(r, p.degree());
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<Complex> aberth(const ComplexPoly& p, const Tolerances& tol) {
  const int n = p.degree();
  const auto c = p.coeffs();
  const double bound = cauchy_bound(p);
  // Golden-section offset keeps the start off any symmetry axis of p.
  const double phase = std::numbers::phi - 1.0;

  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    z[static_cast<std::size_t>(k)] =
        std::polar(bound, 2.0 * std::numbers::pi * k / n + phase);
  }

  std::vector<bool> done(z.size(), false);
  const double noise_factor = 4.0 * (n + 1) * kUnitRoundoff;
  for (int iter = 0; iter < tol.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      const auto [value, slope] = horner2(c, z[i]);
      if (value == 0.0 || std::abs(value) <= noise_factor * eval_magnitude(p, z[i])) {
        done[i] = true;
        continue;
      }
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        Complex gap = z[i] - z[j];
        if (gap == 0.0) gap = Complex{kUnitRoundoff, kUnitRoundoff} * (1.0 + std::abs(z[i]));
        repulsion += 1.0 / gap;
      }
      const Complex denom = slope / value - repulsion;
      Complex step;
      if (denom == 0.0 || !is_finite(denom)) {
        step = Complex{1e-8, 1e-8} * (1.0 + std::abs(z[i]));
      } else {
        step = 1.0 / denom;
      }
      z[i] -= step;
      if (std::abs(step) <= 2.0 * kUnitRoundoff * std::abs(z[i])) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  return z;
}

void newton_polish(const ComplexPoly& p, std::vector<Complex>& z, int steps) {
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < z.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j != i) nearest = std::min(nearest, std::abs(z[i] - z[j]));
    }
    for (int s = 0; s < steps; ++s) {
      const auto [value, slope] = horner2(c, z[i]);
      if (value == 0.0 || slope == 0.0) break;
      const Complex step = value / slope;
      if (!is_finite(step) || std::abs(step) > 0.5 * nearest) break;
      const Complex candidate = z[i] - step;
      if (std::abs(eval(p, candidate)) >= std::abs(value)) break;
      z[i] = candidate;
    }
  }
}

}  // namespace

RootSet roots(const ComplexPoly& p, const Tolerances& tol) {
  const int n = p.degree();
  if (n < 1) throw InputError("constant has no roots");

  std::vector<Complex> z;
  if (n == 1) {
    z.push_back(-p.coeff(0) / p.coeff(1));
  } else {
    z = aberth(p, tol);
    newton_polish(p, z, tol.polish_steps);
  }

  const double radius = tol.cluster_factor * (1.0 + cauchy_bound(p));
  UnionFind groups(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      if (std::abs(z[i] - z[j]) <= radius) groups.unite(i, j);
    }
  }

  RootSet out;
  std::vector<std::size_t> slot(z.size(), z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const std::size_t g = groups.find(i);
    if (slot[g] == z.size()) {
      slot[g] = out.roots.size();
      out.roots.push_back(Root{0.0, 0, 0.0});
    }
    Root& r = out.roots[slot[g]];
    r.location += z[i];
    r.multiplicity += 1;
  }
  for (Root& r : out.roots) {
    r.location /= static_cast<double>(r.multiplicity);
    r.residual = std::abs(eval(p, r.location));
    if (!is_finite(r.location) || !(r.residual <= residual_bound(p, r.location, tol.root))) {
      throw ConvergenceError("root iteration did not converge (residual " +
                                 std::to_string(r.residual) + ")",
                             r.location, r.residual);
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Root& a, const Root& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return out;
}

PolyJet::PolyJet(ComplexPoly p)
    : f_(std::move(p)), df_(derivative(f_)), d2f_(derivative(df_)) {}

HarmonicJet PolyJet::at(double x, double y) const {
  const Complex z{x, y};
  const Complex f = eval(f_, z);
  const Complex fp = eval(df_, z);
  const Complex fpp = eval(d2f_, z);
  HarmonicJet j;
  j.u = f.real();
  j.v = f.imag();
  j.ux = fp.real();
  j.uy = -fp.imag();
  j.uxx = fpp.real();
  j.uxy = -fpp.imag();
  j.uyy = -j.uxx;
  return j;
}

HarmonicJet harmonic_jet(const ComplexPoly& p, double x, double y) {
  return PolyJet(p).at(x, y);
}

}  // namespace harmcurv
