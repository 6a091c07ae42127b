#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "harmcurv/equivalence.hpp"
#include "harmcurv/errors.hpp"
#include "test_support.hpp"

using namespace harmcurv;
using harmcurv::testing::cubic_example;

namespace {

const Complex kI{0.0, 1.0};

double gap(const Witness& w) { return std::abs(w.k_p - w.k_q); }

}  // namespace

TEST_CASE("unit-modulus affine images are certified") {
  const ComplexPoly q = affine_map(cubic_example(), kI, Complex{2.0, 1.0});
  const EquivalenceVerdict v = decide_equal_curvature(cubic_example(), q);
  CHECK(v.equivalent);
  CHECK_FALSE(v.flat_case);
  REQUIRE(v.certificate);
  CHECK(v.certificate->alpha == kI);
  CHECK(v.certificate->beta == Complex{2.0, 1.0});
  CHECK(v.certificate->residual <= 1e-12);
  CHECK_FALSE(v.witness);
}

TEST_CASE("scaling changes the curvature") {
  const EquivalenceVerdict v =
      decide_equal_curvature(ComplexPoly::monomial(2), ComplexPoly::monomial(2, 2.0));
  CHECK_FALSE(v.equivalent);
  CHECK_FALSE(v.certificate);
  REQUIRE(v.witness);
  // The largest gap is at the shared critical point: K_P(0) = -4, K_Q(0) = -16.
  CHECK(std::abs(v.witness->point) <= 0.05);
  CHECK(v.witness->k_p == doctest::Approx(-4.0).epsilon(1e-2));
  CHECK(v.witness->k_q == doctest::Approx(-16.0).epsilon(1e-2));
  CHECK(curvature_at(ComplexPoly::monomial(2, 2.0), 0.0) == -16.0);
}

TEST_CASE("different degrees are separated at large radius") {
  const EquivalenceVerdict v =
      decide_equal_curvature(ComplexPoly::monomial(3), ComplexPoly::monomial(2));
  CHECK_FALSE(v.equivalent);
  REQUIRE(v.witness);
  CHECK(std::abs(v.witness->point) >= 10.0 - 1e-12);
  CHECK(gap(*v.witness) > 1e-3 * std::max(std::abs(v.witness->k_p), std::abs(v.witness->k_q)));
}

TEST_CASE("affine inputs are all flat") {
  const EquivalenceVerdict a = decide_equal_curvature(ComplexPoly{0.0, 1.0}, ComplexPoly{1.0, 3.0});
  CHECK(a.equivalent);
  CHECK(a.flat_case);
  CHECK_FALSE(a.certificate);
  const EquivalenceVerdict b = decide_equal_curvature(ComplexPoly{2.0}, ComplexPoly{0.0, kI});
  CHECK(b.equivalent);
  CHECK(b.flat_case);

  const EquivalenceVerdict c = decide_equal_curvature(ComplexPoly{0.0, 1.0}, ComplexPoly::monomial(2));
  CHECK_FALSE(c.equivalent);
  CHECK_FALSE(c.flat_case);
  REQUIRE(c.witness);
  CHECK(c.witness->k_p == 0.0);
  CHECK(c.witness->k_q < -1.0);
}

TEST_CASE("numeric_curvature_compare") {
  const Domain2D box{-2, 2, -2, 2};
  const CurvatureComparison same = numeric_curvature_compare(cubic_example(), cubic_example(), box, 64);
  CHECK(same.max_diff == 0.0);
  CHECK(same.witness == Complex{box.xmin + 2.0 / 64, box.ymin + 2.0 / 64});

  for (double t : {0.1, 1.0, 2.5, 4.0}) {
    const CurvatureComparison rot =
        numeric_curvature_compare(cubic_example(), rotate(cubic_example(), t), box, 256);
    CHECK(rot.max_diff <= 1e-12);
  }

  const CurvatureComparison shifted =
      numeric_curvature_compare(ComplexPoly::monomial(2), ComplexPoly{0.0, 1.0, 1.0}, box, 64);
  CHECK(shifted.max_diff > 1e-3);
  CHECK(curvature_at(ComplexPoly{0.0, 1.0, 1.0}, 0.0) == -1.0);
}

TEST_CASE("sufficiency holds for random rotations and shifts") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexPoly p = testing::random_poly(rng, testing::random_degree(rng, 2, 8));
    const double theta = testing::uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const Complex beta = testing::in_disk(rng, 3.0);
    const ComplexPoly q = affine_map(p, std::polar(1.0, theta), beta);
    const EquivalenceVerdict v = decide_equal_curvature(p, q);
    CHECK(v.equivalent);
    REQUIRE(v.certificate);
    CHECK(v.certificate->residual <= 1e-12);
    CHECK(std::abs(std::abs(v.certificate->alpha) - 1.0) <= 1e-12);
    CHECK(std::abs(v.certificate->beta - beta) <= 1e-12);
  }
}

TEST_CASE("near misses are refuted with a witness") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexPoly p = testing::random_poly(rng, testing::random_degree(rng, 2, 8));
    const double theta = testing::uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const ComplexPoly q = affine_map(p, std::polar(1.0 + 1e-3, theta), 0.0);
    const EquivalenceVerdict v = decide_equal_curvature(p, q);
    CHECK_FALSE(v.equivalent);
    REQUIRE(v.witness);
    CHECK(gap(*v.witness) > 1e-6);
    CHECK(v.witness->k_p == curvature_at(p, v.witness->point));
    CHECK(v.witness->k_q == curvature_at(q, v.witness->point));
  }
}

TEST_CASE("decider agrees with the numeric comparator") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexPoly p = testing::random_poly(rng, testing::random_degree(rng, 2, 6));
    ComplexPoly q;
    switch (trial % 4) {
      case 0:
        q = affine_map(p, std::polar(1.0, testing::uniform(rng, 0, 6.3)), testing::unit_disk(rng));
        break;
      case 1:
        q = affine_map(p, std::polar(1.0 + 1e-3, testing::uniform(rng, 0, 6.3)), 0.0);
        break;
      case 2:
        q = testing::random_poly(rng, p.degree());
        break;
      default:
        q = p + ComplexPoly{0.0, testing::unit_disk(rng)};
        break;
    }
    const EquivalenceVerdict v = decide_equal_curvature(p, q);
    const CurvatureComparison cmp = numeric_curvature_compare(p, q, default_domain(p, q), 128);
    CHECK(v.equivalent == (cmp.max_diff <= 1e-9));
  }
}

TEST_CASE("curvature ratio of different degrees diverges with radius") {
  std::mt19937_64 rng(44);
  const auto mean_abs_k = [](const ComplexPoly& p, double r) {
    double acc = 0.0;
    for (int s = 0; s < 32; ++s) acc += std::abs(curvature_at(p, std::polar(r, 2 * std::numbers::pi * s / 32)));
    return acc / 32;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const int m = testing::random_degree(rng, 2, 7);
    int n = testing::random_degree(rng, 2, 7);
    if (n == m) n = m + 1;
    const ComplexPoly p = testing::random_poly(rng, m, 0.5);
    const ComplexPoly q = testing::random_poly(rng, n, 0.5);
    const EquivalenceVerdict v = decide_equal_curvature(p, q);
    CHECK_FALSE(v.equivalent);
    REQUIRE(v.witness);
    CHECK(std::abs(v.witness->point) >= 10.0 - 1e-9);

    // |G_P| / |G_Q| ~ R^{2(n - m)}: the log-ratio grows in magnitude.
    double last = 0.0;
    for (double r : {10.0, 20.0, 40.0}) {
      const double logratio = std::log(mean_abs_k(p, r) / mean_abs_k(q, r)) * (n > m ? 1 : -1);
      CHECK(logratio > last);
      last = logratio;
    }
  }
}

TEST_CASE("loop scan of the worked example") {
  const Domain2D d = default_domain(cubic_example());
  const auto four = loop_scan(cubic_example(), 4, d, 256);
  REQUIRE(four.size() == 4);
  for (const LoopSample& s : four) CHECK(s.curvature_deviation <= 1e-12);
  CHECK(four[0].t == 0.0);
  CHECK(four[0].poly == cubic_example());
  CHECK(signatures_equivalent(four[0].signature, four[2].signature));
  CHECK(signatures_equivalent(four[1].signature, four[3].signature));
  CHECK_FALSE(signatures_equivalent(four[0].signature, four[1].signature));
  CHECK(four[0].signature.level_partition.size() == 2);
  REQUIRE(four[1].signature.same_fiber.size() == 1);
  CHECK(four[1].signature.same_fiber[0].same);

  const auto many = loop_scan(cubic_example(), 64, d, 128);
  for (std::size_t k = 0; k < many.size(); ++k) {
    CHECK(many[k].curvature_deviation <= 1e-12);
    CHECK((many[k].signature.same_level_pairs() > 0) == (k == 16 || k == 48));
  }
}

TEST_CASE("loop scan of a single saddle never changes signature") {
  const ComplexPoly sq = ComplexPoly::monomial(2);
  const auto samples = loop_scan(sq, 7, default_domain(sq), 64);
  for (const LoopSample& s : samples) {
    CHECK(s.curvature_deviation <= 1e-12);
    CHECK(signatures_equivalent(s.signature, samples[0].signature));
    CHECK(s.signature.saddle_count == 1);
  }
}

TEST_CASE("loop_scan guards") {
  CHECK_THROWS_AS(loop_scan(cubic_example(), 3, {-1, 1, -1, 1}, 32), InputError);
  CHECK_THROWS_AS(loop_scan(ComplexPoly{0.0, 1.0}, 8, {-1, 1, -1, 1}, 32), InputError);
}
