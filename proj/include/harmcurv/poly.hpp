#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "harmcurv/tolerances.hpp"

namespace harmcurv {

using Complex = std::complex<double>;

bool is_finite(Complex z);

// Polynomial with complex coefficients in ascending powers. Trailing zero
// coefficients are trimmed on construction (exact zeros only), so degree()
// is the index of the highest nonzero coefficient. The zero polynomial is
// stored as a single zero coefficient and has degree 0.
class ComplexPoly {
 public:
  ComplexPoly();
  explicit ComplexPoly(std::vector<Complex> coeffs);
  ComplexPoly(std::initializer_list<Complex> coeffs);

  static ComplexPoly monomial(int power, Complex coeff = 1.0);

  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex coeff(int k) const;
  Complex leading() const { return coeffs_.back(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

  // max_k |coeff_k|
  double max_coeff_magnitude() const;

  Complex operator()(Complex z) const;

  friend bool operator==(const ComplexPoly&, const ComplexPoly&) = default;

 private:
  void trim();

  std::vector<Complex> coeffs_;
};

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);

// Horner evaluation. Throws InputError for non-finite z.
Complex eval(const ComplexPoly& p, Complex z);

// sum_k |coeff_k| |z|^k, the natural scale of rounding error in eval().
double eval_magnitude(const ComplexPoly& p, Complex z);

ComplexPoly derivative(const ComplexPoly& p);

// alpha * p + beta, coefficient-wise.
ComplexPoly affine_map(const ComplexPoly& p, Complex alpha, Complex beta);

// e^{it} p. Its real part is cos(t) u - sin(t) v.
ComplexPoly rotate(const ComplexPoly& p, double t);

struct Root {
  Complex location;
  int multiplicity = 1;
  double residual = 0.0;
};

struct RootSet {
  std::vector<Root> roots;

  int total_multiplicity() const;
  std::size_t distinct() const { return roots.size(); }
  std::vector<Complex> locations() const;
};

// 1 + max_{k<n} |c_k / c_n|; every root lies in the disk of this radius.
double cauchy_bound(const ComplexPoly& p);

// All roots with multiplicities, via Aberth-Ehrlich simultaneous iteration
// followed by Newton polishing. Roots closer than
// cluster_factor * (1 + cauchy_bound) are merged.
//
// Throws InputError for constant input and ConvergenceError when some
// iterate fails to reach the backward-error target.
RootSet roots(const ComplexPoly& p, const Tolerances& tol = {});

// Values and derivatives of u = Re f at (x, y), read off f, f', f''.
struct HarmonicJet {
  double u = 0, v = 0;
  double ux = 0, uy = 0;
  double uxx = 0, uxy = 0, uyy = 0;
};

HarmonicJet harmonic_jet(const ComplexPoly& p, double x, double y);

// f, f' and f'' of one polynomial, derived once and reused for many points.
class PolyJet {
 public:
  explicit PolyJet(ComplexPoly p);

  const ComplexPoly& f() const { return f_; }
  const ComplexPoly& df() const { return df_; }
  const ComplexPoly& d2f() const { return d2f_; }

  HarmonicJet at(double x, double y) const;

 private:
  ComplexPoly f_, df_, d2f_;
};

}  // namespace harmcurv
