#ifndef PPLATEAU_SOLVER_HPP
#define PPLATEAU_SOLVER_HPP

#include "pplateau/complex.hpp"
#include "pplateau/functionals.hpp"
#include "pplateau/report.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pplateau {

/**
 * Partial Plateau instance: minimize M_H(T) - ∂T(φ) over integer m-chains T
 * with ∂(T - T0) ⪯ B.
 */
struct Problem {
  ComplexPtr complex;
  int m = 1;
  Chain boundary_limit;  // B, dimension m - 1
  Chain t0;              // dimension m
  Cochain phi;           // dimension m - 1
  Integrand h = Integrand::identity();
  /// Per m-cell bound on |T(σ)|; derived from the energy budget when absent.
  std::optional<std::vector<std::int64_t>> caps;
  std::size_t max_minimizers = 64;
  /// Subtrees whose remaining box has at most this many points are enumerated
  /// directly.
  std::uint64_t exhaustive_threshold = 256;
};

/// Problem with T0 = 0 and identity integrand unless given.
Problem make_problem(const Chain& b, const Cochain& phi, std::optional<Chain> t0 = std::nullopt,
                     Integrand h = Integrand::identity());

/// Throws DomainError when dimensions or complexes are inconsistent.
void check_problem(const Problem& p);

struct Solution {
  /// Lexicographically ordered, at most max_minimizers entries.
  std::vector<Chain> minimizers;
  EnergyValue value;
  Report certificate;
  /// A user cap is tighter than the derived one: the value is then only an
  /// upper bound on the uncapped minimum.
  bool bounds_active = false;
  /// More minimizers exist than were reported.
  bool truncated = false;
  std::vector<std::int64_t> caps;
  std::uint64_t nodes = 0;
};

/**
 * Largest |T(σ)| any chain with E(T) <= E(T0) can carry: H(t)·μ(σ) must stay
 * below M_H(T0) + M(B)·comass(φ) + |∂T0(φ)|.
 */
std::vector<std::int64_t> derive_bounds(const Problem& p);

/// Exact minimum and all minimizers (up to the limit), by branch and bound.
Solution solve(const Problem& p);

/// Independent full enumeration of the cap box; feasibility through the mass
/// identity and energies through energy(). Throws if the box exceeds 1e8 points.
Solution exhaustive_oracle(const Problem& p, const std::vector<std::int64_t>& caps);
Solution exhaustive_oracle(const Problem& p, std::int64_t cap);

/// Re-checks feasibility and energies of every reported minimizer.
Report certify(const Problem& p, const Solution& s);

}  // namespace pplateau

#endif
