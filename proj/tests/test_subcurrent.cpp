#include "pplateau/functionals.hpp"
#include "pplateau/subcurrent.hpp"
#include "pplateau/sunflower.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace pplateau;
using namespace testsupport;

namespace {

ComplexPtr unit_points(int n) {
  ComplexBuilder b(1);
  for (int i = 0; i < n; ++i) b.add_cell(0, "s" + std::to_string(i), Scalar(1));
  return b.build();
}

// Random A with A(σ) between 0 and B(σ) on every cell.
Chain random_sub(Rng& rng, const Chain& b) {
  Chain a(b.complex(), b.dim());
  for (const auto& [i, v] : b.terms()) a.set(i, v > 0 ? uniform_int(rng, 0, v) : -uniform_int(rng, 0, -v));
  return a;
}

}  // namespace

TEST_SUITE("subcurrent") {
  TEST_CASE("mass identity examples") {
    const ComplexPtr cx = unit_points(2);
    const Chain b = Chain::from_dense(cx, 0, {2, 1});
    CHECK(is_subcurrent(Chain(cx, 0), b));
    CHECK(is_subcurrent(Chain::from_dense(cx, 0, {1, 1}), b));
    CHECK_FALSE(is_subcurrent(Chain::from_dense(cx, 0, {-1, 0}), b));
    CHECK_FALSE(is_subcurrent(Chain::from_dense(cx, 0, {3, 0}), b));
    CHECK(is_subcurrent(Chain(cx, 0), Chain(cx, 0)));
    CHECK_FALSE(is_subcurrent(Chain::from_dense(cx, 0, {1, 0}), Chain(cx, 0)));
  }

  TEST_CASE("boundary box examples") {
    const ComplexPtr cx = unit_points(3);
    const BoundaryBox zero = boundary_box(Chain(cx, 0));
    for (const auto& iv : zero.cells) CHECK((iv.lo == 0 && iv.hi == 0));
    const BoundaryBox neg = boundary_box(Chain::from_dense(cx, 0, {-2, 1, 0}));
    CHECK(neg.cells[0].lo == -2);
    CHECK(neg.cells[0].hi == 0);
    CHECK(neg.cells[1].lo == 0);
    CHECK(neg.cells[1].hi == 1);
    // Segment e = q - p, B = δ_p, T0 = 3e: ∂T ranges over ∂T0 + [0, B].
    ComplexBuilder sb(1);
    sb.add_cell(0, "p", Scalar(1));
    sb.add_cell(0, "q", Scalar(1));
    sb.add_cell(1, "e", Scalar(1));
    sb.add_face(1, "e", "q", 1);
    sb.add_face(1, "e", "p", -1);
    const ComplexPtr seg = sb.build();
    const BoundaryBox shifted = boundary_box(Chain::from_dense(seg, 0, {1, 0}), Chain::from_dense(seg, 1, {3}));
    CHECK(shifted.cells[0].lo == -3);
    CHECK(shifted.cells[0].hi == -2);
    CHECK(shifted.cells[1].lo == 3);
    CHECK(shifted.cells[1].hi == 3);
  }

  TEST_CASE("sunflower box reproduces the petal constraints") {
    // a·D + Σ c_i P_i is admissible iff 0 <= c_i <= 1 and 0 <= c_i - a <= 2.
    SunflowerSpec spec;
    spec.petals = 2;
    spec.petal_phi = {0, 0};
    const SunflowerScenario s = build_sunflower(spec);
    const BoundaryBox box = boundary_box(s.b);
    std::set<std::int64_t> disk_values;
    for (std::int64_t a = -4; a <= 4; ++a)
      for (std::int64_t c1 = -4; c1 <= 4; ++c1)
        for (std::int64_t c2 = -4; c2 <= 4; ++c2) {
          const Chain t = s.candidate(a, {c1, c2});
          const bool expected = 0 <= c1 && c1 <= 1 && 0 <= c2 && c2 <= 1 && 0 <= c1 - a && c1 - a <= 2 &&
                                0 <= c2 - a && c2 - a <= 2;
          CHECK(box.contains(boundary(t)) == expected);
          CHECK(is_subcurrent(boundary(t), s.b) == expected);
          if (expected) disk_values.insert(a);
        }
    CHECK(disk_values == std::set<std::int64_t>{-2, -1, 0, 1});
  }

  TEST_CASE("limit closure") {
    const ComplexPtr cx = unit_points(2);
    const Chain b = Chain::from_dense(cx, 0, {2, -1});
    const Chain a1 = Chain::from_dense(cx, 0, {1, 0}), a2 = Chain::from_dense(cx, 0, {2, -1});
    CHECK(check_limit_closure(b, {a1, a1, a1}));
    CHECK(check_limit_closure(b, {a2, a1, a1, a1}));
    CHECK_THROWS_AS(check_limit_closure(b, {a1, a2, a1, a2}), DomainError);
    CHECK_THROWS_AS(check_limit_closure(b, {a1}), DomainError);
    CHECK_THROWS_AS(check_limit_closure(b, {Chain::from_dense(cx, 0, {3, 0}), a1, a1}), DomainError);
  }

  TEST_CASE("property: random subcurrent pairs") {
    Rng rng(41);
    const Integrand hs[] = {Integrand::alpha(Rational(1, 2)), random_table(rng)};
    for (int trial = 0; trial < 1000; ++trial) {
      const ComplexPtr cx = random_complex(rng, 1 + trial % 2);
      const int d = static_cast<int>(uniform_int(rng, 0, cx->top_dim()));
      const Chain b = random_chain(rng, cx, d, 4);
      const Chain a = trial % 3 ? random_sub(rng, b) : random_chain(rng, cx, d, 4);
      const bool sub = is_subcurrent(a, b);
      CHECK(sub == is_subcurrent_cellwise(a, b));
      CHECK(sub == boundary_box(b).contains(a));
      if (trial % 3) CHECK(sub);
      if (sub) {
        CHECK(mass(a) <= mass(b));
        for (const Integrand& h : hs) CHECK(h_mass(a, h) <= h_mass(b, h));
      }
    }
  }

  TEST_CASE("property: eventually constant sequences close") {
    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
      const ComplexPtr cx = random_complex(rng, 1);
      const Chain b = random_chain(rng, cx, 1, 3);
      std::vector<Chain> seq;
      const int head = static_cast<int>(uniform_int(rng, 0, 4));
      for (int i = 0; i < head; ++i) seq.push_back(random_sub(rng, b));
      const Chain limit = random_sub(rng, b);
      for (int i = 0; i < head + 2; ++i) seq.push_back(limit);
      CHECK(check_limit_closure(b, seq));
    }
  }
}
