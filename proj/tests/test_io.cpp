#include "pplateau/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <string>

using namespace pplateau;
using namespace testsupport;

namespace {

const char* kSegment = R"(pplateau-complex v1
# a single edge
dim 1
cells 0
cell p measure 1
cell q measure 1
cells 1
cell e measure 0.5 segment pq
face e q 1
face e p -1
coord p 0 0
coord q 1/2 0
)";

std::string parse_error(auto&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("parse a small complex") {
    const ComplexPtr cx = parse_complex(kSegment, "seg.complex");
    CHECK(cx->top_dim() == 1);
    CHECK(cx->cell(1, 0).measure.identical(Scalar(Rational(1, 2))));
    CHECK(cx->cell(1, 0).label == "segment pq");
    CHECK(cx->has_coordinates());
    CHECK(cx->coordinates(1) == std::vector<Rational>{Rational(1, 2), Rational(0)});
  }

  TEST_CASE("complex round trip is exact") {
    const ComplexPtr cx = parse_complex(kSegment);
    const std::string text = write_complex(*cx);
    CHECK(write_complex(*parse_complex(text)) == text);
  }

  TEST_CASE("property: random complexes, chains and cochains round trip") {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
      const ComplexPtr cx = random_complex(rng, 1 + trial % 2);
      const std::string text = write_complex(*cx);
      const ComplexPtr back = parse_complex(text);
      REQUIRE(write_complex(*back) == text);
      for (int d = 0; d <= cx->top_dim(); ++d)
        for (std::size_t i = 0; i < cx->cell_count(d); ++i) {
          CHECK(back->cell(d, i).id == cx->cell(d, i).id);
          CHECK(back->cell(d, i).measure.identical(cx->cell(d, i).measure));
          CHECK(back->faces(d, i).size() == cx->faces(d, i).size());
        }
      const Chain c = random_chain(rng, back, cx->top_dim(), 5);
      CHECK(parse_chain(write_chain(c), back) == c);
      Cochain phi = random_cochain(rng, back, 0);
      phi.set(0, Scalar::inexact(0.1 * trial + 1e-3));
      const Cochain phi2 = parse_cochain(write_cochain(phi), back);
      for (std::size_t i = 0; i < back->cell_count(0); ++i) CHECK(phi2[i].identical(phi[i]));
    }
  }

  TEST_CASE("integrand round trip") {
    Rng rng(22);
    std::vector<Integrand> hs{Integrand::identity(), Integrand::alpha(Rational(1, 4)), Integrand::alpha(0)};
    for (int i = 0; i < 10; ++i) hs.push_back(random_table(rng));
    for (const Integrand& h : hs) CHECK(parse_integrand(write_integrand(h)) == h);
    CHECK(parse_integrand("integrand alpha 0.5\n") == Integrand::alpha(Rational(1, 2)));
    CHECK(parse_integrand("integrand table\n0 0\n1 1\n3 2\n").points().size() == 3);
  }

  TEST_CASE("errors name source and line") {
    CHECK(parse_error([] { parse_complex("pplateau-complex v2\n", "x.complex"); }).rfind("x.complex:1:", 0) == 0);
    const std::string bad_measure = "pplateau-complex v1\ndim 1\ncells 0\ncell p measure -1\n";
    CHECK(parse_error([&] { parse_complex(bad_measure, "m.complex"); }).rfind("m.complex:4:", 0) == 0);
    const std::string bad_face = "pplateau-complex v1\ndim 1\ncells 0\ncell p measure 1\ncells 1\ncell e measure 1\nface e zz 1\n";
    CHECK(parse_error([&] { parse_complex(bad_face, "f.complex"); }).rfind("f.complex:7:", 0) == 0);
    const ComplexPtr cx = parse_complex(kSegment);
    CHECK(parse_error([&] { parse_chain("chain 1\nnope 1\n", cx, "c.chain"); }).rfind("c.chain:2:", 0) == 0);
    CHECK(parse_error([&] { parse_chain("chain 1\ne 1.5\n", cx, "c.chain"); }).rfind("c.chain:2:", 0) == 0);
    CHECK(parse_error([&] { parse_cochain("cochain 0\np x\n", cx, "phi"); }).rfind("phi:2:", 0) == 0);
    CHECK(parse_error([&] { parse_integrand("integrand alpha 2\n", "h"); }).rfind("h:1:", 0) == 0);
    CHECK(parse_error([] { read_file("/nonexistent/file"); }).find("/nonexistent/file") != std::string::npos);
  }
}
