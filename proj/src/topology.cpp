#include "harmcurv/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "harmcurv/errors.hpp"

namespace harmcurv {

ComplexPoly PartSelector::apply(const ComplexPoly& p) const {
  switch (kind_) {
    case Kind::Real:
      return p;
    case Kind::Imag:
      return part_poly(p, Part::Imag);
    case Kind::Rotated:
      return rotate(p, angle_);
  }
  return p;
}

LevelField::LevelField(const ComplexPoly& g, const Domain2D& domain, int n)
    : lattice{domain, n, n}, values(lattice.size()) {
  domain.validate();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      values[lattice.index(i, j)] = eval(g, {lattice.x(i), lattice.y(j)}).real();
    }
  }
}

double LevelField::max_adjacent_jump() const {
  const int n = lattice.nx;
  double jump = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double w = values[lattice.index(i, j)];
      if (i + 1 < n) jump = std::max(jump, std::abs(values[lattice.index(i + 1, j)] - w));
      if (j + 1 < n) jump = std::max(jump, std::abs(values[lattice.index(i, j + 1)] - w));
    }
  }
  return jump;
}

double default_band_halfwidth(const LevelField& field, const Tolerances& tol) {
  return tol.band_factor * field.max_adjacent_jump();
}

namespace {

constexpr int kUnlabelled = -1;
constexpr int kOutside = -2;

using BandMask = std::vector<char>;

BandMask uniform_band(const LevelField& field, double c, double delta) {
  BandMask band(field.values.size(), 0);
  for (std::size_t k = 0; k < band.size(); ++k) band[k] = std::abs(field.values[k] - c) <= delta;
  return band;
}

// A cell joins the band when its distance to the level is within band_factor
// times its own largest jump to a 4-neighbour. Every cell on either side of a
// sign change of w - c qualifies, so the band follows each level curve as a
// 4-connected strip about one cell wide.
BandMask adaptive_band(const LevelField& field, double c, double factor) {
  const Lattice& lat = field.lattice;
  BandMask band(field.values.size(), 0);
  for (int j = 0; j < lat.ny; ++j) {
    for (int i = 0; i < lat.nx; ++i) {
      const std::size_t k = lat.index(i, j);
      const double w = field.values[k];
      double jump = 0.0;
      if (i > 0) jump = std::max(jump, std::abs(field.values[lat.index(i - 1, j)] - w));
      if (i + 1 < lat.nx) jump = std::max(jump, std::abs(field.values[lat.index(i + 1, j)] - w));
      if (j > 0) jump = std::max(jump, std::abs(field.values[lat.index(i, j - 1)] - w));
      if (j + 1 < lat.ny) jump = std::max(jump, std::abs(field.values[lat.index(i, j + 1)] - w));
      band[k] = std::abs(w - c) <= factor * jump;
    }
  }
  return band;
}

// Labels 4-connected components of the band; returns the component count.
// Labels are assigned in order of each component's smallest cell index.
int label_band(const LevelField& field, const BandMask& band, double max_fraction,
               std::vector<int>& labels) {
  const Lattice& lat = field.lattice;
  labels.assign(lat.size(), kOutside);
  std::size_t in_band = 0;
  for (std::size_t k = 0; k < lat.size(); ++k) {
    if (band[k]) {
      labels[k] = kUnlabelled;
      ++in_band;
    }
  }
  if (static_cast<double>(in_band) > max_fraction * static_cast<double>(lat.size())) {
    throw NumericError("band too wide");
  }

  int count = 0;
  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < lat.size(); ++seed) {
    if (labels[seed] != kUnlabelled) continue;
    labels[seed] = count;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      const int i = static_cast<int>(k % static_cast<std::size_t>(lat.nx));
      const int j = static_cast<int>(k / static_cast<std::size_t>(lat.nx));
      const auto visit = [&](int ii, int jj) {
        if (ii < 0 || jj < 0 || ii >= lat.nx || jj >= lat.ny) return;
        const std::size_t nb = lat.index(ii, jj);
        if (labels[nb] == kUnlabelled) {
          labels[nb] = count;
          stack.push_back(nb);
        }
      };
      visit(i - 1, j);
      visit(i + 1, j);
      visit(i, j - 1);
      visit(i, j + 1);
    }
    ++count;
  }
  return count;
}

int label_of(const LevelField& field, const std::vector<int>& labels, Complex z) {
  const long cell = field.lattice.cell_of(z);
  if (cell < 0) return kOutside;
  return labels[static_cast<std::size_t>(cell)];
}

// The level curve passes through both query points, so their cells belong to
// the band even when the sampled values miss it.
bool connected_at(const LevelField& field, double c, Complex a, Complex b, const Tolerances& tol) {
  const long ca = field.lattice.cell_of(a);
  const long cb = field.lattice.cell_of(b);
  if (ca < 0 || cb < 0) return false;
  BandMask band = adaptive_band(field, c, tol.band_factor);
  band[static_cast<std::size_t>(ca)] = 1;
  band[static_cast<std::size_t>(cb)] = 1;
  std::vector<int> labels;
  label_band(field, band, tol.band_max_fraction, labels);
  return labels[static_cast<std::size_t>(ca)] == labels[static_cast<std::size_t>(cb)];
}

// Pair decision on two resolutions; the fields are built once per query set.
struct FiberOracle {
  LevelField coarse;
  LevelField fine;

  FiberOracle(const ComplexPoly& g, const Domain2D& domain, int n)
      : coarse(g, domain, n), fine(g, domain, 2 * n) {}

  bool connected(double c, Complex a, Complex b, const Tolerances& tol) const {
    const bool at_n = connected_at(coarse, c, a, b, tol);
    const bool at_2n = connected_at(fine, c, a, b, tol);
    if (at_n != at_2n) throw ResolutionError("resolution-sensitive; refine grid");
    return at_n;
  }
};

double level_tolerance(double max_abs_value, const Tolerances& tol) {
  return tol.level_equality * (1.0 + max_abs_value);
}

}  // namespace

std::vector<LevelComponent> level_components(const ComplexPoly& p, const PartSelector& part,
                                             double c, const Domain2D& domain, int n, double delta,
                                             const Tolerances& tol) {
  if (n < 16) throw InputError("level grid needs n >= 16");
  if (!(delta > 0.0)) throw InputError("band half-width must be positive");

  const LevelField field(part.apply(p), domain, n);
  std::vector<int> labels;
  const int count = label_band(field, uniform_band(field, c, delta), tol.band_max_fraction, labels);

  std::vector<LevelComponent> out(static_cast<std::size_t>(count));
  for (LevelComponent& comp : out) comp.level = c;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] >= 0) out[static_cast<std::size_t>(labels[k])].cells.push_back(k);
  }
  const std::vector<CriticalPoint> cps = critical_points(p, tol);
  for (std::size_t idx = 0; idx < cps.size(); ++idx) {
    const int label = label_of(field, labels, cps[idx].location);
    if (label >= 0) {
      out[static_cast<std::size_t>(label)].contains_critical.push_back(static_cast<int>(idx));
    }
  }
  return out;
}

const char* to_string(FiberRelation r) {
  switch (r) {
    case FiberRelation::SameFiber:
      return "same-fiber";
    case FiberRelation::DifferentFibers:
      return "different-fibers";
    case FiberRelation::DifferentLevels:
      return "different-levels";
  }
  return "?";
}

FiberRelation same_fiber(const ComplexPoly& p, const PartSelector& part, const CriticalPoint& a,
                         const CriticalPoint& b, const Domain2D& domain, int n,
                         const Tolerances& tol) {
  if (n < 16) throw InputError("level grid needs n >= 16");
  const ComplexPoly g = part.apply(p);
  const double wa = eval(g, a.location).real();
  const double wb = eval(g, b.location).real();
  if (std::abs(wa - wb) > level_tolerance(std::max(std::abs(wa), std::abs(wb)), tol)) {
    return FiberRelation::DifferentLevels;
  }
  if (a.location == b.location) return FiberRelation::SameFiber;

  const FiberOracle oracle(g, domain, n);
  return oracle.connected(0.5 * (wa + wb), a.location, b.location, tol)
             ? FiberRelation::SameFiber
             : FiberRelation::DifferentFibers;
}

FiberRelation same_fiber(const ComplexPoly& p, const PartSelector& part, const CriticalPoint& a,
                         const CriticalPoint& b, const Tolerances& tol) {
  return same_fiber(p, part, a, b, default_domain(p, tol), 512, tol);
}

bool FiberSignature::same(int a, int b) const {
  if (a == b) return true;
  if (a > b) std::swap(a, b);
  for (const FiberPair& pair : same_fiber) {
    if (pair.a == a && pair.b == b) return pair.same;
  }
  return false;
}

FiberSignature fiber_signature(const ComplexPoly& p, const PartSelector& part,
                               const Domain2D& domain, int n, const Tolerances& tol) {
  if (p.degree() < 2) throw InputError("insufficient degree");
  if (n < 16) throw InputError("level grid needs n >= 16");
  domain.validate();

  const ComplexPoly g = part.apply(p);
  const std::vector<CriticalPoint> cps = critical_points(p, tol);

  FiberSignature sig;
  std::vector<std::pair<double, int>> levels;
  double max_abs = 0.0;
  for (std::size_t idx = 0; idx < cps.size(); ++idx) {
    if (cps[idx].kind == CriticalKind::Degenerate) {
      ++sig.degenerate_count;
      continue;
    }
    const double w = eval(g, cps[idx].location).real();
    levels.emplace_back(w, static_cast<int>(idx));
    max_abs = std::max(max_abs, std::abs(w));
  }
  sig.saddle_count = static_cast<int>(levels.size());
  std::sort(levels.begin(), levels.end());

  const double ltol = level_tolerance(max_abs, tol);
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (k == 0 || levels[k].first - levels[k - 1].first > ltol) {
      sig.level_partition.push_back(LevelClass{});
    }
    LevelClass& cls = sig.level_partition.back();
    cls.value += levels[k].first;
    cls.members.push_back(levels[k].second);
  }

  bool any_pairs = false;
  for (LevelClass& cls : sig.level_partition) {
    cls.value /= static_cast<double>(cls.members.size());
    std::sort(cls.members.begin(), cls.members.end());
    any_pairs = any_pairs || cls.members.size() > 1;
  }
  if (!any_pairs) return sig;

  const FiberOracle oracle(g, domain, n);
  for (const LevelClass& cls : sig.level_partition) {
    for (std::size_t x = 0; x < cls.members.size(); ++x) {
      for (std::size_t y = x + 1; y < cls.members.size(); ++y) {
        const int a = cls.members[x], b = cls.members[y];
        const bool same = oracle.connected(cls.value, cps[static_cast<std::size_t>(a)].location,
                                           cps[static_cast<std::size_t>(b)].location, tol);
        sig.same_fiber.push_back(FiberPair{a, b, same});
      }
    }
  }
  return sig;
}

namespace {

// For each level class, the sizes of its same-fiber groups, sorted; the whole
// list sorted so that signatures compare as multisets.
std::vector<std::vector<int>> fiber_patterns(const FiberSignature& sig) {
  std::vector<std::vector<int>> patterns;
  for (const LevelClass& cls : sig.level_partition) {
    const std::size_t m = cls.members.size();
    std::vector<std::size_t> group(m);
    std::iota(group.begin(), group.end(), 0);
    const auto root = [&](std::size_t i) {
      while (group[i] != i) i = group[i];
      return i;
    };
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = x + 1; y < m; ++y) {
        if (sig.same(cls.members[x], cls.members[y])) group[root(y)] = root(x);
      }
    }
    std::vector<int> sizes(m, 0);
    for (std::size_t x = 0; x < m; ++x) ++sizes[root(x)];
    std::erase(sizes, 0);
    std::sort(sizes.begin(), sizes.end());
    patterns.push_back(std::move(sizes));
  }
  std::sort(patterns.begin(), patterns.end());
  return patterns;
}

}  // namespace

bool signatures_equivalent(const FiberSignature& a, const FiberSignature& b) {
  if (a.saddle_count != b.saddle_count || a.degenerate_count != b.degenerate_count) return false;
  const auto class_sizes = [](const FiberSignature& s) {
    std::vector<std::size_t> sizes;
    for (const LevelClass& cls : s.level_partition) sizes.push_back(cls.members.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  return class_sizes(a) == class_sizes(b) && fiber_patterns(a) == fiber_patterns(b);
}

}  // namespace harmcurv
