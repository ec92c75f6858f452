#ifndef PPLATEAU_SUBCURRENT_HPP
#define PPLATEAU_SUBCURRENT_HPP

#include "pplateau/complex.hpp"

#include <cstdint>
#include <vector>

namespace pplateau {

/// A ⪯ B via the mass identity M(B) = M(B - A) + M(A), evaluated exactly.
bool is_subcurrent(const Chain& a, const Chain& b);

/// A ⪯ B via the per-cell rule: A(σ) lies between 0 and B(σ) on every cell.
/// Agrees with is_subcurrent() on complexes without zero-measure cells.
bool is_subcurrent_cellwise(const Chain& a, const Chain& b);

struct CoefficientInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
};

/// Admissible coefficient of ∂T on each (m-1)-cell, dense in cell order.
struct BoundaryBox {
  int dim = 0;
  std::vector<CoefficientInterval> cells;

  bool contains(const Chain& boundary_chain) const;
};

/**
 * Per-cell box for ∂T under ∂(T - T0) ⪯ B: on σ the coefficient ranges over
 * ∂T0(σ) + s with s between 0 and B(σ) inclusive. Pass a zero chain (or use
 * the one-argument overload) for T0 = 0.
 */
BoundaryBox boundary_box(const Chain& b, const Chain& t0);
BoundaryBox boundary_box(const Chain& b);

/**
 * Limit of a sequence of subcurrents of B is a subcurrent of B. Integer
 * chains converge only by becoming constant, so the sequence must end in a
 * constant run covering at least its second half (and at least two terms).
 * Throws DomainError if that fails or if some term is not a subcurrent of B.
 */
bool check_limit_closure(const Chain& b, const std::vector<Chain>& sequence);

}  // namespace pplateau

#endif
