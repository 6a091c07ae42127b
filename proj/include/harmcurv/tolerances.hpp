#pragma once

#include <cstddef>

namespace harmcurv {

// Every numeric threshold used by the library lives here so that tests and
// the CLI can refer to them by name.
struct Tolerances {
  // Root finding.
  double root = 1e-13;              // relative backward-error target
  int max_iterations = 200;         // Aberth sweeps
  int polish_steps = 5;             // Newton steps per root after Aberth
  double cluster_factor = 1e-7;     // clustering radius / (1 + Cauchy bound)

  // Curvature.
  double formula_agreement = 1e-9;
  double nonpositivity_slack = 1e-12;
  std::size_t grid_cap = std::size_t{16} << 20;

  // Critical points and hulls.
  double degeneracy = 1e-8;         // relative to 1 + max |P'' coefficient|
  double collinearity = 1e-12;      // relative to scale^2
  double containment_slack = 1e-8;  // absolute

  // Level sets.
  double level_equality = 1e-9;     // relative to 1 + max |critical value|
  double band_factor = 1.5;         // band half-width / max adjacent-cell jump
  double band_max_fraction = 0.9;

  // Curvature equivalence.
  double unit_modulus = 1e-9;
  double coefficient_match = 1e-9;  // relative to largest coefficient magnitude
  double witness_absolute = 1e-6;
  double witness_relative = 1e-3;
};

}  // namespace harmcurv
