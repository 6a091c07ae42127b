#pragma once

#include <optional>
#include <vector>

#include "harmcurv/curvature.hpp"
#include "harmcurv/poly.hpp"
#include "harmcurv/tolerances.hpp"
#include "harmcurv/topology.hpp"

namespace harmcurv {

// Q = alpha P + beta with |alpha| = 1. residual is the largest non-constant
// coefficient of Q - alpha P.
struct Certificate {
  Complex alpha;
  Complex beta;
  double residual = 0.0;
};

// A point where the two curvature fields differ.
struct Witness {
  Complex point;
  double k_p = 0.0;
  double k_q = 0.0;
};

struct EquivalenceVerdict {
  bool equivalent = false;
  bool flat_case = false;  // both inputs affine, both graphs planes
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;
};

// Decides whether the graphs of Re P and Re Q carry the same Gaussian
// curvature field, i.e. whether Q = alpha P + beta with |alpha| = 1.
// Total: every input pair gets a verdict.
EquivalenceVerdict decide_equal_curvature(const ComplexPoly& p, const ComplexPoly& q,
                                          const Tolerances& tol = {});

struct CurvatureComparison {
  double max_diff = 0.0;
  Complex witness;  // argmax, smallest lattice index on ties
};

CurvatureComparison numeric_curvature_compare(const ComplexPoly& p, const ComplexPoly& q,
                                              const Domain2D& domain, int n,
                                              const Tolerances& tol = {});

struct LoopSample {
  double t = 0.0;
  ComplexPoly poly;                  // e^{it} P
  double curvature_deviation = 0.0;  // max over the grid of |G_{P_t} - G_P|
  FiberSignature signature;          // of Re(e^{it} P)
};

// Samples the curvature-preserving loop t -> e^{it} P at t_k = 2 pi k / num_samples.
// Throws InputError for num_samples < 4 or degree < 2.
std::vector<LoopSample> loop_scan(const ComplexPoly& p, int num_samples, const Domain2D& domain,
                                  int n, const Tolerances& tol = {});

}  // namespace harmcurv
