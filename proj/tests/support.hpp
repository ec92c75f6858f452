// Random instances and brute-force reference implementations shared by the
// unit tests and the acceptance runner. Nothing here calls the search code
// under test.
#ifndef PPLATEAU_TESTS_SUPPORT_HPP
#define PPLATEAU_TESTS_SUPPORT_HPP

#include "pplateau/complex.hpp"
#include "pplateau/functionals.hpp"
#include "pplateau/polyhedral.hpp"
#include "pplateau/solver.hpp"

#include <random>
#include <vector>

namespace testsupport {

using namespace pplateau;
using Rng = std::mt19937_64;

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);
Rational random_measure(Rng& rng);

/// Simplicial complex on 3..5 vertices with random positive rational
/// measures, at most max_cells cells and at least one top cell.
ComplexPtr random_complex(Rng& rng, int top_dim, std::size_t max_cells = 12, std::size_t max_top = 6);

Chain random_chain(Rng& rng, const ComplexPtr& cx, int dim, std::int64_t limit);
Cochain random_cochain(Rng& rng, const ComplexPtr& cx, int dim);
/// Concave piecewise-linear table through (0,0), (1,1) with decreasing slopes.
Integrand random_table(Rng& rng);

struct RandomProblem {
  Problem problem;
  std::vector<std::int64_t> caps;
};
/// Random partial Plateau instance with caps in 1..max_cap.
RandomProblem random_problem(Rng& rng, std::int64_t max_cap = 3, bool zero_phi = false);

struct BruteResult {
  Scalar value;
  std::vector<Chain> minimizers;  // sorted by lex_less
};
/// Enumerates every integer chain inside caps and keeps the feasible ones of
/// least energy, checking ∂(T - T0) ⪯ B with is_subcurrent.
BruteResult brute_solve(const Problem& p, const std::vector<std::int64_t>& caps);

/// min over |S| <= cap of cost_H(T - ∂S) + cost_H(S); `first` receives the
/// first minimizing S in lexicographic order of its dense coefficients.
Scalar brute_flat(const Chain& t, const Integrand& h, std::int64_t cap, Chain* first = nullptr);
/// Real flat norm by enumerating vertices of the hyperplane arrangement
/// {S_τ = 0} ∪ {(∂S)_σ = T_σ}; the piecewise-linear convex cost attains its
/// minimum at one of them.
Rational brute_flat_real(const Chain& t);

PolyhedralChain random_polyhedral(Rng& rng, int ambient, int dim, int simplices);
Point random_point(Rng& rng, int ambient);

}  // namespace testsupport

#endif
