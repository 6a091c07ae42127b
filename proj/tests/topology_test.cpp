#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "harmcurv/errors.hpp"
#include "harmcurv/topology.hpp"
#include "test_support.hpp"

using namespace harmcurv;
using harmcurv::testing::cubic_example;

namespace {

const Domain2D kBox3{-3, 3, -3, 3};

// z^4 - 2z^2: saddles at -1, 0, 1. Re has the pair (+-1, 0) at level -1 on
// two fibers separated by the imaginary axis (where u = y^4 + 2y^2 >= 0).
const ComplexPoly kQuartic{0.0, 0.0, -2.0, 0.0, 1.0};

bool has(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

int component_with(const std::vector<LevelComponent>& comps, int critical_index) {
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (has(comps[k].contains_critical, critical_index)) return static_cast<int>(k);
  }
  return -1;
}

}  // namespace

TEST_CASE("level components of a linear function") {
  const ComplexPoly id{0.0, 1.0};
  for (int n : {16, 64, 200}) {
    const Domain2D d{-1, 1, -1, 1};
    const double delta = default_band_halfwidth(LevelField(id, d, n));
    const auto comps = level_components(id, Part::Real, 0.0, d, n, delta);
    CHECK(comps.size() == 1);
    CHECK(comps[0].level == 0.0);
    CHECK(std::is_sorted(comps[0].cells.begin(), comps[0].cells.end()));
  }
}

TEST_CASE("level zero of v joins both saddles of the worked example") {
  for (int n : {256, 512, 1024}) {
    const double delta = default_band_halfwidth(LevelField(part_poly(cubic_example(), Part::Imag), kBox3, n));
    const auto comps = level_components(cubic_example(), Part::Imag, 0.0, kBox3, n, delta);
    REQUIRE(comps.size() == 1);
    CHECK(has(comps[0].contains_critical, 0));
    CHECK(has(comps[0].contains_critical, 1));
  }
}

TEST_CASE("level -2 of u passes through one saddle only") {
  const auto cps = critical_points(cubic_example());
  REQUIRE(cps.size() == 2);
  const double delta = default_band_halfwidth(LevelField(cubic_example(), kBox3, 512));
  const auto comps = level_components(cubic_example(), Part::Real, -2.0, kBox3, 512, delta);
  // cps[1] is (1, 0) with u = -2; cps[0] is (-1, 0) with u = +2.
  const int with_right = component_with(comps, 1);
  REQUIRE(with_right >= 0);
  CHECK_FALSE(has(comps[static_cast<std::size_t>(with_right)].contains_critical, 0));
  CHECK(component_with(comps, 0) == -1);
}

TEST_CASE("level_components guards") {
  CHECK_THROWS_AS(level_components(cubic_example(), Part::Real, 0.0, kBox3, 8, 0.1), InputError);
  CHECK_THROWS_AS(level_components(cubic_example(), Part::Real, 0.0, kBox3, 64, 0.0), InputError);
  CHECK_THROWS_WITH_AS(level_components(cubic_example(), Part::Real, 0.0, kBox3, 64, 1e6),
                       "band too wide", NumericError);
}

TEST_CASE("same_fiber on the worked example") {
  const auto cps = critical_points(cubic_example());
  REQUIRE(cps.size() == 2);
  CHECK(same_fiber(cubic_example(), Part::Imag, cps[0], cps[1]) == FiberRelation::SameFiber);
  CHECK(same_fiber(cubic_example(), Part::Imag, cps[1], cps[0]) == FiberRelation::SameFiber);
  CHECK(same_fiber(cubic_example(), Part::Real, cps[0], cps[1]) == FiberRelation::DifferentLevels);

  const auto sq = critical_points(ComplexPoly::monomial(2));
  REQUIRE(sq.size() == 1);
  CHECK(same_fiber(ComplexPoly::monomial(2), Part::Real, sq[0], sq[0]) == FiberRelation::SameFiber);
}

TEST_CASE("same_fiber separates equal-level saddles on distinct fibers") {
  const auto cps = critical_points(kQuartic);
  REQUIRE(cps.size() == 3);
  const Domain2D d = default_domain(kQuartic);
  for (int n : {256, 512}) {
    CHECK(same_fiber(kQuartic, Part::Real, cps[0], cps[2], d, n) == FiberRelation::DifferentFibers);
    CHECK(same_fiber(kQuartic, Part::Real, cps[2], cps[0], d, n) == FiberRelation::DifferentFibers);
    CHECK(same_fiber(kQuartic, Part::Real, cps[0], cps[1], d, n) == FiberRelation::DifferentLevels);
    CHECK(same_fiber(kQuartic, Part::Imag, cps[0], cps[2], d, n) == FiberRelation::SameFiber);
    CHECK(same_fiber(kQuartic, Part::Imag, cps[0], cps[1], d, n) == FiberRelation::SameFiber);
  }
}

TEST_CASE("fiber signatures of the worked example") {
  const Domain2D d = default_domain(cubic_example());
  const FiberSignature re = fiber_signature(cubic_example(), Part::Real, d);
  CHECK(re.saddle_count == 2);
  CHECK(re.degenerate_count == 0);
  REQUIRE(re.level_partition.size() == 2);
  CHECK(re.level_partition[0].members == std::vector<int>{1});
  CHECK(re.level_partition[0].value == doctest::Approx(-2.0));
  CHECK(re.level_partition[1].members == std::vector<int>{0});
  CHECK(re.same_fiber.empty());

  const FiberSignature im = fiber_signature(cubic_example(), Part::Imag, d);
  CHECK(im.saddle_count == 2);
  REQUIRE(im.level_partition.size() == 1);
  CHECK(im.level_partition[0].members == std::vector<int>{0, 1});
  CHECK(std::abs(im.level_partition[0].value) <= 1e-12);
  REQUIRE(im.same_fiber.size() == 1);
  CHECK(im.same_fiber[0].same);
  CHECK(im.same(0, 1) == im.same(1, 0));

  CHECK_FALSE(signatures_equivalent(re, im));
  CHECK(signatures_equivalent(re, re));
  CHECK(signatures_equivalent(im, im));
}

TEST_CASE("fiber signature is stable under refinement") {
  const Domain2D d = default_domain(cubic_example());
  for (Part part : {Part::Real, Part::Imag}) {
    const FiberSignature base = fiber_signature(cubic_example(), part, d, 256);
    for (int n : {512, 1024}) {
      const FiberSignature other = fiber_signature(cubic_example(), part, d, n);
      CHECK(signatures_equivalent(base, other));
      CHECK(other.same_fiber.size() == base.same_fiber.size());
    }
  }
}

TEST_CASE("a single saddle cannot tell the parts apart") {
  const ComplexPoly sq = ComplexPoly::monomial(2);
  const Domain2D d = default_domain(sq);
  const FiberSignature re = fiber_signature(sq, Part::Real, d);
  const FiberSignature im = fiber_signature(sq, Part::Imag, d);
  CHECK(re.saddle_count == 1);
  REQUIRE(re.level_partition.size() == 1);
  CHECK(re.level_partition[0].members.size() == 1);
  CHECK(signatures_equivalent(re, im));
}

TEST_CASE("signature of z^4 - 2z^2 records the split fiber") {
  const Domain2D d = default_domain(kQuartic);
  const FiberSignature re = fiber_signature(kQuartic, Part::Real, d);
  CHECK(re.saddle_count == 3);
  REQUIRE(re.level_partition.size() == 2);
  CHECK(re.level_partition[0].members == std::vector<int>{0, 2});
  REQUIRE(re.same_fiber.size() == 1);
  CHECK_FALSE(re.same_fiber[0].same);

  const FiberSignature im = fiber_signature(kQuartic, Part::Imag, d);
  REQUIRE(im.level_partition.size() == 1);
  CHECK(im.same_fiber.size() == 3);
  for (const FiberPair& pr : im.same_fiber) CHECK(pr.same);
  CHECK_FALSE(signatures_equivalent(re, im));
}

TEST_CASE("degenerate points are counted apart from saddles") {
  const FiberSignature cube = fiber_signature(ComplexPoly::monomial(3), Part::Real,
                                              default_domain(ComplexPoly::monomial(3)));
  CHECK(cube.saddle_count == 0);
  CHECK(cube.degenerate_count == 1);
  CHECK(cube.level_partition.empty());
  CHECK_THROWS_AS(fiber_signature(ComplexPoly{0.0, 1.0}, Part::Real, kBox3), InputError);
}

TEST_CASE("equal-level pairs along the rotation family occur only where cos t vanishes") {
  // Critical values of Re(e^{it} f) at (+-1, 0) are -+2 cos t.
  const Domain2D d = default_domain(cubic_example());
  const double pi = std::numbers::pi;
  for (double t : {0.0, 0.3, pi / 2 - 1e-6, pi / 2, pi / 2 + 1e-6, 2.0, pi, 3 * pi / 2, 5.5}) {
    const FiberSignature sig = fiber_signature(cubic_example(), PartSelector::rotated(t), d, 256);
    const bool paired = std::abs(std::cos(t)) <= 1e-9 * 3.0;
    CHECK(sig.saddle_count == 2);
    CHECK((sig.same_level_pairs() == 1) == paired);
    if (paired) CHECK(sig.same_fiber[0].same);
  }
}

TEST_CASE("too coarse a grid is reported rather than guessed") {
  // Scaled copy of z^4 - 2z^2: the two level-(-0.0016) fibers pass within
  // about 0.28 of each other, below the resolution of a 24-cell grid.
  const double eps = 0.2;
  const ComplexPoly p{0.0, 0.0, -2 * eps * eps, 0.0, 1.0};
  const auto cps = critical_points(p);
  REQUIRE(cps.size() == 3);
  const Domain2D d{-1.05, 0.95, -1.02, 0.98};
  CHECK_THROWS_WITH_AS(same_fiber(p, Part::Real, cps[0], cps[2], d, 24),
                       "resolution-sensitive; refine grid", ResolutionError);
  CHECK(same_fiber(p, Part::Real, cps[0], cps[2], d, 256) == FiberRelation::DifferentFibers);
}
