#include "pplateau/slicer.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace pplateau;
using namespace testsupport;

namespace {

PolyhedralChain unit_segment(std::int64_t mult) {
  PolyhedralChain t(2, 1);
  t.add({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}, mult);
  return t;
}

}  // namespace

TEST_SUITE("slicer") {
  TEST_CASE("slice a segment") {
    PolyhedralChain t(2, 1);
    t.add({{Rational(0), Rational(0)}, {Rational(2), Rational(0)}}, 1);
    const ZeroCurrent z = slice(t, {{{1.0, 0.0}}, {1.0}});
    REQUIRE(z.points.size() == 1);
    CHECK(z.points[0].weight == 1);
    CHECK(z.points[0].x[0] == doctest::Approx(1.0));
    CHECK(z.points[0].x[1] == doctest::Approx(0.0));
    CHECK(slice(t, {{{1.0, 0.0}}, {3.0}}).points.empty());
    CHECK(slice(t, {{{-1.0, 0.0}}, {-1.0}}).points[0].weight == -1);
    CHECK_THROWS_AS(slice(t, {{{1.0, 0.0}}, {2.0}}), DegenerateSlice);
    CHECK_THROWS_AS(slice(t, {{{1.0, 1.0}}, {1.0}}), DomainError);
  }

  TEST_CASE("property: slices of cycles have zero total weight") {
    Rng rng(91);
    for (int trial = 0; trial < 50; ++trial) {
      const PolyhedralChain z = random_polyhedral(rng, 2, 2, 3);
      const PolyhedralChain cycle = boundary(z);
      CounterRng r(7, 0, static_cast<std::uint64_t>(trial), 0);
      for (int k = 0; k < 20; ++k) {
        const auto p = random_projection(1, 2, r);
        try {
          const ZeroCurrent s = slice(cycle, {p, {r.normal()}});
          std::int64_t total = 0;
          for (const auto& q : s.points) total += q.weight;
          CHECK(total == 0);
        } catch (const DegenerateSlice&) {
        }
      }
    }
  }

  TEST_CASE("random projections are orthonormal") {
    CounterRng r(1, 2, 3, 4);
    const auto p = random_projection(2, 4, r);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double dot = 0;
        for (int k = 0; k < 4; ++k) dot += p[i][k] * p[j][k];
        CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
      }
  }

  TEST_CASE("counter generator is reproducible") {
    CounterRng a(5, 1, 100, 0), b(5, 1, 100, 0), c(5, 1, 101, 0);
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }

  TEST_CASE("unit cube chain") {
    CHECK(mass(unit_cube(3, 2)) == doctest::Approx(1.0));
    CHECK(canonical(boundary(boundary(unit_cube(3, 3)))).is_zero());
    CHECK(mass(boundary(unit_cube(2, 2))) == doctest::Approx(4.0));
  }

  TEST_CASE("zero chain estimates to zero") {
    const McEstimate e = mc_h_mass(PolyhedralChain(2, 1), Integrand::identity(), {1000, 3, 1});
    CHECK(e.estimate == 0.0);
    CHECK(e.standard_error == 0.0);
  }

  TEST_CASE("calibration approximates 2/pi for segments in the plane") {
    const McEstimate e = mc_h_mass(unit_segment(1), Integrand::identity(), {100000, 9, 2});
    CHECK(std::abs(e.calibration - 2 / M_PI) < 4 * e.calibration_error);
  }

  TEST_CASE("estimates do not depend on the worker count") {
    const McEstimate a = mc_h_mass(unit_segment(2), Integrand::alpha(Rational(1, 2)), {20000, 4, 1});
    const McEstimate b = mc_h_mass(unit_segment(2), Integrand::alpha(Rational(1, 2)), {20000, 4, 3});
    CHECK(a.estimate == b.estimate);
    CHECK(a.standard_error == b.standard_error);
  }

  TEST_CASE("identity estimate lies within three standard errors for most seeds") {
    Rng rng(92);
    const PolyhedralChain t = random_polyhedral(rng, 3, 2, 3);
    const double exact = mass(t);
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const McEstimate e = mc_h_mass(t, Integrand::identity(), {20000, seed, 2});
      if (std::abs(e.estimate - exact) <= 3 * e.standard_error) ++hits;
    }
    CHECK(hits >= 19);
  }

  TEST_CASE("H-mass of a triangle chain") {
    Rng rng(93);
    PolyhedralChain t(3, 2);
    t.add({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, 3);
    const Integrand h = Integrand::alpha(Rational(1, 2));
    const McEstimate e = mc_h_mass(t, h, {50000, 11, 2});
    CHECK(std::abs(e.estimate - h_mass(t, h)) / h_mass(t, h) < 0.05);
  }
}
