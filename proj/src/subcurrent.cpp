#include "pplateau/subcurrent.hpp"

#include <cstdlib>

namespace pplateau {

bool is_subcurrent(const Chain& a, const Chain& b) {
  a.require_compatible(b);
  // M(B - A) + M(A) - M(B) as a sum of per-cell terms μ(σ)·k(σ) with k >= 0;
  // it vanishes exactly, with no tolerance, iff the identity holds.
  Scalar excess;
  const Chain diff = b - a;
  for (std::size_t i = 0; i < a.cell_count(); ++i) {
    const std::int64_t k = std::abs(diff[i]) + std::abs(a[i]) - std::abs(b[i]);
    if (k != 0) excess += Scalar(k) * a.complex()->cell(a.dim(), i).measure;
  }
  return excess.is_zero();
}

bool is_subcurrent_cellwise(const Chain& a, const Chain& b) {
  a.require_compatible(b);
  for (const auto& [i, v] : a.terms()) {
    const std::int64_t w = b[i];
    if (w > 0 ? (v < 0 || v > w) : (v > 0 || v < w)) return false;
  }
  return true;
}

bool BoundaryBox::contains(const Chain& c) const {
  if (c.dim() != dim) return false;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (!cells[i].contains(c[i])) return false;
  return true;
}

BoundaryBox boundary_box(const Chain& b, const Chain& t0) {
  if (t0.complex() != b.complex()) throw DomainError("boundary_box: B and T0 live on different complexes");
  if (t0.dim() != b.dim() + 1) throw DomainError("boundary_box: T0 must have dimension dim(B) + 1");
  const Chain dt0 = boundary(t0);
  BoundaryBox box;
  box.dim = b.dim();
  box.cells.resize(b.cell_count());
  for (std::size_t i = 0; i < box.cells.size(); ++i) {
    const std::int64_t shift = dt0[i];
    const std::int64_t w = b[i];
    box.cells[i] = {shift + std::min<std::int64_t>(0, w), shift + std::max<std::int64_t>(0, w)};
  }
  return box;
}

BoundaryBox boundary_box(const Chain& b) {
  if (b.dim() + 1 > b.complex()->top_dim()) {
    BoundaryBox box;
    box.dim = b.dim();
    box.cells.resize(b.cell_count());
    for (std::size_t i = 0; i < box.cells.size(); ++i)
      box.cells[i] = {std::min<std::int64_t>(0, b[i]), std::max<std::int64_t>(0, b[i])};
    return box;
  }
  return boundary_box(b, Chain(b.complex(), b.dim() + 1));
}

bool check_limit_closure(const Chain& b, const std::vector<Chain>& sequence) {
  if (sequence.size() < 2) throw DomainError("limit closure: need at least two terms");
  std::size_t run = 1;
  while (run < sequence.size() && sequence[sequence.size() - 1 - run] == sequence.back()) ++run;
  if (run < 2 || 2 * run < sequence.size())
    throw DomainError("limit closure: sequence is not eventually constant (stable tail of " + std::to_string(run) +
                      " of " + std::to_string(sequence.size()) + " terms)");
  for (std::size_t i = 0; i < sequence.size(); ++i)
    if (!is_subcurrent(sequence[i], b))
      throw DomainError("limit closure: term " + std::to_string(i) + " is not a subcurrent of B");
  return is_subcurrent(sequence.back(), b);
}

}  // namespace pplateau
