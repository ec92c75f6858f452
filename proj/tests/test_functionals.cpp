#include "pplateau/functionals.hpp"
#include "pplateau/sunflower.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace pplateau;
using namespace testsupport;

namespace {

ComplexPtr points(const std::vector<Scalar>& measures) {
  ComplexBuilder b(1);
  for (std::size_t i = 0; i < measures.size(); ++i) b.add_cell(0, "x" + std::to_string(i), measures[i]);
  return b.build();
}

Chain chain_on(const ComplexPtr& cx, const std::vector<std::int64_t>& v) { return Chain::from_dense(cx, 0, v); }

}  // namespace

TEST_SUITE("functionals") {
  TEST_CASE("integrand evaluation") {
    const Integrand sq = Integrand::alpha(Rational(1, 2));
    CHECK(sq(4).identical(Scalar(2)));
    CHECK(sq(Scalar(Rational(9, 4))).identical(Scalar(Rational(3, 2))));
    CHECK(sq(2).to_double() == doctest::Approx(std::sqrt(2.0)));
    CHECK(Integrand::alpha(0)(0).is_zero());
    CHECK(Integrand::alpha(0)(7).identical(Scalar(1)));
    const Integrand t = Integrand::table({{0, 0}, {1, 1}, {3, 2}});
    CHECK(t(2).identical(Scalar(Rational(3, 2))));
    CHECK(t(5).identical(Scalar(3)));  // terminal slope 1/2
    CHECK_THROWS_AS(Integrand::alpha(Rational(3, 2)), DomainError);
    CHECK_THROWS_AS(Integrand::table({{1, 1}, {2, 2}}), DomainError);
  }

  TEST_CASE("validate_integrand examples") {
    CHECK(validate_integrand(Integrand::identity()).empty());
    CHECK(validate_integrand(Integrand::alpha(Rational(1, 2))).empty());
    const Integrand square = Integrand::table({{0, 0}, {1, 1}, {2, 4}});
    const Report r = validate_integrand(square, {Scalar(1), Scalar(2)});
    CHECK(has_kind(r, "subadditive"));
    CHECK_FALSE(square.valid());
    const Report flat = validate_integrand(Integrand::table({{0, 0}, {1, 1}, {2, 1}}));
    CHECK(has_kind(flat, "strictly-increasing"));
    CHECK(has_kind(flat, "unbounded"));
    CHECK(has_kind(validate_integrand(Integrand::table({{0, 0}, {1, 2}})), "h-one"));
    CHECK(has_kind(validate_integrand(Integrand::table({{0, 1}, {1, 1}, {2, 2}})), "h-zero"));
  }

  TEST_CASE("size integrand violates monotonicity and unboundedness") {
    const Report r = validate_integrand(Integrand::alpha(0));
    CHECK(has_kind(r, "strictly-increasing"));
    CHECK(has_kind(r, "unbounded"));
    CHECK_FALSE(has_kind(r, "subadditive"));
  }

  TEST_CASE("upper inverse") {
    CHECK(Integrand::alpha(Rational(1, 2)).upper_inverse(Scalar(3)) == 9);
    CHECK(Integrand::identity().upper_inverse(Scalar(Rational(7, 2))) == 3);
    CHECK(Integrand::identity().upper_inverse(Scalar(-1)) == -1);
    CHECK(Integrand::identity().upper_inverse(Scalar(0)) == 0);
    CHECK(Integrand::table({{0, 0}, {1, 1}, {3, 2}}).upper_inverse(Scalar(3)) == 5);
  }

  TEST_CASE("mass examples") {
    const ComplexPtr cx = points({Scalar(2)});
    CHECK(mass(Chain(cx, 0)).is_zero());
    CHECK(mass(chain_on(cx, {-3})).identical(Scalar(6)));
    const ComplexPtr unit = points({Scalar(1), Scalar(1)});
    CHECK(h_mass(chain_on(unit, {2, 0}), Integrand::alpha(Rational(1, 2))).to_double() == doctest::Approx(std::sqrt(2.0)));
    CHECK(h_mass(Chain(unit, 0), Integrand::alpha(Rational(1, 2))).is_zero());
    CHECK_THROWS_AS(h_mass(chain_on(unit, {1, 0}), Integrand::alpha(0)), DomainError);
  }

  TEST_CASE("alpha mass examples") {
    const ComplexPtr unit = points({Scalar(1), Scalar(1)});
    CHECK(alpha_mass(chain_on(unit, {5, 1}), 0).identical(Scalar(2)));
    CHECK(alpha_mass(chain_on(unit, {5, -1}), 1).identical(mass(chain_on(unit, {5, -1}))));
    CHECK(alpha_mass(chain_on(points({Scalar(3)}), {4}), Rational(1, 2)).identical(Scalar(6)));
  }

  TEST_CASE("sunflower boundary mass") {
    SunflowerSpec spec;
    spec.petal_phi = std::vector<Scalar>(8, Scalar(0));
    spec.inner_length = Scalar(8);
    spec.arc_lengths = std::vector<Scalar>(8, Scalar(Rational(3, 2)));
    const SunflowerScenario s = build_sunflower(spec);
    CHECK(mass(s.b).identical(Scalar(2 * 8 + 12)));
  }

  TEST_CASE("energy and comass examples") {
    Rng rng(3);
    const ComplexPtr cx = random_complex(rng, 1);
    const Chain zero(cx, 1);
    const Cochain phi = random_cochain(rng, cx, 0);
    CHECK(energy(zero, phi, Integrand::identity()).energy.is_zero());
    ComplexBuilder b(1);
    b.add_cell(0, "a", Scalar(2));
    const ComplexPtr one = b.build();
    Cochain c(one, 0);
    CHECK(comass(c).is_zero());
    c.set(0, Scalar(3));
    CHECK(comass(c).identical(Scalar(Rational(3, 2))));
  }

  TEST_CASE("sunflower T-2 energy") {
    SunflowerSpec spec;
    spec.petal_phi = {2, 2, 2, 2, 1, 1, 0, 0};
    spec.disk_pairing = Scalar(-10);
    const SunflowerScenario s = build_sunflower(spec);
    const EnergyValue e = energy(s.candidate(-2, std::vector<std::int64_t>(8, 0)), s.phi, Integrand::identity());
    CHECK(e.energy.identical(Scalar(-18)));
    CHECK(e.h_mass.identical(Scalar(2)));
  }

  TEST_CASE("property: integrand laws on random valid tables") {
    Rng rng(31);
    std::vector<Integrand> hs{Integrand::identity(), Integrand::alpha(Rational(1, 4)), Integrand::alpha(Rational(1, 2)),
                              Integrand::alpha(1)};
    for (int i = 0; i < 20; ++i) hs.push_back(random_table(rng));
    for (const Integrand& h : hs) {
      CAPTURE(h.describe());
      REQUIRE(h.valid());
      const Scalar h2 = h(2);
      for (std::int64_t theta = 1; theta <= 64; ++theta) CHECK(h(theta) <= h2 * Scalar(theta));
      for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(uniform_int(rng, 1, 6));
        const ComplexPtr cx = points(std::vector<Scalar>(n, Scalar(1)));
        std::vector<std::int64_t> v(n);
        for (auto& x : v) x = uniform_int(rng, -9, 9);
        const Chain c = chain_on(cx, v);
        CHECK(h(mass(c)) <= h_mass(c, h));
      }
    }
  }

  TEST_CASE("property: h_mass is subadditive and agrees with mass for identity") {
    Rng rng(32);
    for (int trial = 0; trial < 200; ++trial) {
      const ComplexPtr cx = random_complex(rng, 2);
      const Chain a = random_chain(rng, cx, 1, 4), b = random_chain(rng, cx, 1, 4);
      const Integrand h = trial % 2 ? random_table(rng) : Integrand::alpha(Rational(1, 3));
      CHECK(h_mass(a + b, h) <= h_mass(a, h) + h_mass(b, h));
      CHECK(h_mass(a, Integrand::identity()).identical(mass(a)));
    }
  }

  TEST_CASE("property: pairing bounded by comass times boundary mass") {
    Rng rng(33);
    for (int trial = 0; trial < 200; ++trial) {
      const ComplexPtr cx = random_complex(rng, 2);
      const Chain t = random_chain(rng, cx, 2, 4);
      const Cochain phi = random_cochain(rng, cx, 1);
      CHECK(abs(energy(t, phi, Integrand::identity()).pairing) <= comass(phi) * mass(boundary(t)));
    }
  }
}
