#pragma once

#include <cstddef>
#include <vector>

#include "harmcurv/critical.hpp"
#include "harmcurv/curvature.hpp"
#include "harmcurv/poly.hpp"
#include "harmcurv/tolerances.hpp"

namespace harmcurv {

// Selects the harmonic function w = Re(g) whose level sets are studied:
// g = f, g = -i f (so w = v), or g = e^{it} f (w = cos t u - sin t v).
class PartSelector {
 public:
  PartSelector(Part part = Part::Real) : kind_(part == Part::Real ? Kind::Real : Kind::Imag) {}
  static PartSelector rotated(double t) { return PartSelector(Kind::Rotated, t); }

  ComplexPoly apply(const ComplexPoly& p) const;

 private:
  enum class Kind { Real, Imag, Rotated };
  PartSelector(Kind kind, double t) : kind_(kind), angle_(t) {}

  Kind kind_;
  double angle_ = 0.0;
};

// Samples of w on the cell-centre lattice of an n x n grid.
struct LevelField {
  Lattice lattice;
  std::vector<double> values;

  LevelField(const ComplexPoly& g, const Domain2D& domain, int n);

  // Largest |w| difference between 4-adjacent cells.
  double max_adjacent_jump() const;
};

// Band half-width: band_factor times the largest jump between neighbours.
double default_band_halfwidth(const LevelField& field, const Tolerances& tol = {});

struct LevelComponent {
  double level = 0.0;
  std::vector<std::size_t> cells;      // ascending cell indices
  std::vector<int> contains_critical;  // indices into critical_points(P)
};

// 4-connected components of {cells : |w - c| <= delta}, ordered by smallest
// cell index. Throws InputError for n < 16 or delta <= 0, NumericError when
// the band covers more than band_max_fraction of the domain.
std::vector<LevelComponent> level_components(const ComplexPoly& p, const PartSelector& part,
                                             double c, const Domain2D& domain, int n, double delta,
                                             const Tolerances& tol = {});

enum class FiberRelation { SameFiber, DifferentFibers, DifferentLevels };

const char* to_string(FiberRelation r);

// Whether two critical points of equal level lie on one fiber of the selected
// part. The band around the level is sized per cell (band_factor times the
// cell's largest jump to a neighbour), so it stays about one cell wide even
// where |grad w| is small. Decided on grids of size n and 2n; disagreement
// throws ResolutionError.
FiberRelation same_fiber(const ComplexPoly& p, const PartSelector& part, const CriticalPoint& a,
                         const CriticalPoint& b, const Domain2D& domain, int n = 512,
                         const Tolerances& tol = {});
FiberRelation same_fiber(const ComplexPoly& p, const PartSelector& part, const CriticalPoint& a,
                         const CriticalPoint& b, const Tolerances& tol = {});

struct LevelClass {
  double value = 0.0;
  std::vector<int> members;  // indices into critical_points(P), ascending
};

struct FiberPair {
  int a = 0, b = 0;  // a < b
  bool same = false;
};

struct FiberSignature {
  int saddle_count = 0;
  int degenerate_count = 0;
  std::vector<LevelClass> level_partition;  // ordered by value
  std::vector<FiberPair> same_fiber;

  // Symmetric; false for pairs that do not share a level.
  bool same(int a, int b) const;
  std::size_t same_level_pairs() const { return same_fiber.size(); }
};

// Groups the non-degenerate critical points by level and resolves every
// equal-level pair. Throws InputError for degree < 2.
FiberSignature fiber_signature(const ComplexPoly& p, const PartSelector& part,
                               const Domain2D& domain, int n = 512, const Tolerances& tol = {});

// Necessary condition for topological equivalence: a false result certifies
// that no homeomorphisms relate the two functions, true proves nothing.
bool signatures_equivalent(const FiberSignature& a, const FiberSignature& b);

}  // namespace harmcurv
