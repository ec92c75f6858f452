#include "pplateau/lp.hpp"

#include <cstddef>
#include <optional>

namespace pplateau {

namespace {

using Row = std::vector<Rational>;

struct Tableau {
  std::vector<Row> rows;           // constraint rows, last entry is the rhs
  Row objective;                   // reduced costs, last entry is -z
  std::vector<std::size_t> basis;  // basic column per row

  std::size_t width() const { return objective.size() - 1; }

  void pivot(std::size_t r, std::size_t col) {
    Row& pr = rows[r];
    const Rational inv = 1 / pr[col];
    for (auto& v : pr) v *= inv;
    auto eliminate = [&](Row& row) {
      if (row[col] == 0) return;
      const Rational f = row[col];
      for (std::size_t j = 0; j < row.size(); ++j)
        if (pr[j] != 0) row[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i]);
    eliminate(objective);
    basis[r] = col;
  }

  // Bland's rule over columns < limit. Returns false when unbounded.
  bool optimize(std::size_t limit) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < limit; ++j)
        if (objective[j] < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][*enter] <= 0) continue;
        const Rational ratio = rows[i].back() / rows[i][*enter];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  LpSolution out;

  // Phase 1 tableau over [x | artificial | rhs].
  Tableau t;
  t.rows.assign(m, Row(n + m + 1, Rational(0)));
  t.objective.assign(n + m + 1, Rational(0));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = lp.b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rational(-lp.a[i][j]) : lp.a[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][n + m] = flip ? Rational(-lp.b[i]) : lp.b[i];
    t.basis[i] = n + i;
    // Reduced cost of the phase-1 objective (sum of artificials).
    for (std::size_t j = 0; j < n; ++j) t.objective[j] -= t.rows[i][j];
    t.objective[n + m] -= t.rows[i][n + m];
  }
  t.optimize(n + m);
  if (t.objective[n + m] != 0) {
    out.status = LpSolution::Status::infeasible;
    return out;
  }

  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j)
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2 over the original columns.
  Tableau p;
  p.basis = t.basis;
  p.rows.reserve(t.rows.size());
  for (const Row& r : t.rows) {
    Row row(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    row.push_back(r.back());
    p.rows.push_back(std::move(row));
  }
  p.objective.assign(n + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) p.objective[j] = lp.c[j];
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const Rational cb = lp.c[p.basis[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) p.objective[j] -= cb * p.rows[i][j];
  }
  if (!p.optimize(n)) {
    out.status = LpSolution::Status::unbounded;
    return out;
  }
  out.status = LpSolution::Status::optimal;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < p.rows.size(); ++i) out.x[p.basis[i]] = p.rows[i].back();
  out.objective = -p.objective[n];
  return out;
}

}  // namespace pplateau
