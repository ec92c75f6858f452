#include "pplateau/flatnorm.hpp"

#include "pplateau/lp.hpp"

#include <cstdlib>
#include <optional>

namespace pplateau {

namespace {

struct FlatData {
  ComplexPtr cx;
  int m = 0;
  std::size_t fill_cells = 0;
  std::size_t rem_cells = 0;
  // columns[τ] = faces of (m+1)-cell τ
  std::vector<std::vector<Incidence>> columns;
  std::vector<Rational> fill_measure;
  std::vector<Rational> rem_measure;
  std::vector<std::int64_t> target;
};

FlatData flat_data(const Chain& t) {
  FlatData d;
  d.cx = t.complex();
  d.m = t.dim();
  d.rem_cells = t.cell_count();
  d.target = t.dense();
  for (std::size_t i = 0; i < d.rem_cells; ++i) d.rem_measure.push_back(d.cx->cell(d.m, i).measure.to_rational());
  if (d.m + 1 <= d.cx->top_dim()) {
    d.fill_cells = d.cx->cell_count(d.m + 1);
    for (std::size_t j = 0; j < d.fill_cells; ++j) {
      d.columns.push_back(d.cx->faces(d.m + 1, j));
      d.fill_measure.push_back(d.cx->cell(d.m + 1, j).measure.to_rational());
    }
  }
  return d;
}

Chain filling_chain(const FlatData& d, const std::vector<std::int64_t>& s) {
  if (d.fill_cells == 0) return Chain(d.cx, d.m);
  return Chain::from_dense(d.cx, d.m + 1, s);
}

FlatCertificate certificate(const Chain& t, const FlatData& d, const std::vector<std::int64_t>& s,
                            std::int64_t cap, const Integrand* h) {
  FlatCertificate cert;
  cert.filling = filling_chain(d, s);
  cert.remainder = d.fill_cells == 0 ? t : t - boundary(cert.filling);
  if (d.fill_cells == 0) {
    cert.value = h ? h_mass(t, *h) : mass(t);
    return cert;
  }
  cert.value = h ? h_mass(cert.remainder, *h) + h_mass(cert.filling, *h) : mass(cert.remainder) + mass(cert.filling);
  for (std::int64_t v : s)
    if (std::llabs(v) == cap) cert.cap_active = true;
  return cert;
}

bool all_exact(const Chain& t) {
  const auto& cx = t.complex();
  for (int d = t.dim(); d <= std::min(t.dim() + 1, cx->top_dim()); ++d)
    for (std::size_t i = 0; i < cx->cell_count(d); ++i)
      if (!cx->cell(d, i).measure.exact()) return false;
  return true;
}

// LP relaxation of the capped integral problem with the first `fixed` filling
// coefficients pinned to s[0..fixed). Returns the relaxed optimum including
// the cost of the pinned coefficients.
Rational relaxed_bound(const FlatData& d, const std::vector<std::int64_t>& s, std::size_t fixed, std::int64_t cap) {
  std::vector<Rational> rhs(d.rem_cells);
  for (std::size_t i = 0; i < d.rem_cells; ++i) rhs[i] = d.target[i];
  Rational pinned = 0;
  for (std::size_t j = 0; j < fixed; ++j) {
    pinned += d.fill_measure[j] * std::llabs(s[j]);
    for (const Incidence& f : d.columns[j]) rhs[f.cell] -= Rational(f.coefficient * s[j]);
  }
  const std::size_t free = d.fill_cells - fixed;
  // Columns: S+ (free) | S- (free) | slack+ | slack- | R+ | R-.
  const std::size_t n = 4 * free + 2 * d.rem_cells;
  LinearProgram lp;
  lp.c.assign(n, Rational(0));
  for (std::size_t j = 0; j < free; ++j) {
    lp.c[j] = d.fill_measure[fixed + j];
    lp.c[free + j] = d.fill_measure[fixed + j];
  }
  const std::size_t r0 = 4 * free;
  for (std::size_t i = 0; i < d.rem_cells; ++i) {
    lp.c[r0 + i] = d.rem_measure[i];
    lp.c[r0 + d.rem_cells + i] = d.rem_measure[i];
  }
  for (std::size_t i = 0; i < d.rem_cells; ++i) {
    std::vector<Rational> row(n, Rational(0));
    row[r0 + i] = 1;
    row[r0 + d.rem_cells + i] = -1;
    lp.a.push_back(std::move(row));
    lp.b.push_back(rhs[i]);
  }
  for (std::size_t j = 0; j < free; ++j)
    for (const Incidence& f : d.columns[fixed + j]) {
      lp.a[f.cell][j] += f.coefficient;
      lp.a[f.cell][free + j] -= f.coefficient;
    }
  for (std::size_t j = 0; j < free; ++j)
    for (int sign = 0; sign < 2; ++sign) {
      std::vector<Rational> row(n, Rational(0));
      row[sign * free + j] = 1;
      row[2 * free + sign * free + j] = 1;
      lp.a.push_back(std::move(row));
      lp.b.push_back(Rational(cap));
    }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpSolution::Status::optimal) throw DomainError("flat norm relaxation failed to solve");
  return pinned + sol.objective;
}

Rational integral_cost(const FlatData& d, const std::vector<std::int64_t>& s) {
  std::vector<std::int64_t> r = d.target;
  Rational cost = 0;
  for (std::size_t j = 0; j < d.fill_cells; ++j) {
    cost += d.fill_measure[j] * std::llabs(s[j]);
    for (const Incidence& f : d.columns[j]) r[f.cell] -= f.coefficient * s[j];
  }
  for (std::size_t i = 0; i < d.rem_cells; ++i) cost += d.rem_measure[i] * std::llabs(r[i]);
  return cost;
}

}  // namespace

RealFlatCertificate flat_norm_real(const Chain& t) {
  const FlatData d = flat_data(t);
  RealFlatCertificate cert;
  RationalChain target(d.cx, d.m);
  for (const auto& [i, v] : t.terms()) target.set(i, Rational(v));
  if (d.fill_cells == 0) {
    cert.filling = RationalChain(d.cx, d.m);
    cert.remainder = target;
    cert.value = mass(t);
    return cert;
  }
  const std::size_t k = d.fill_cells;
  const std::size_t r = d.rem_cells;
  const std::size_t n = 2 * k + 2 * r;
  LinearProgram lp;
  lp.c.assign(n, Rational(0));
  for (std::size_t j = 0; j < k; ++j) lp.c[j] = lp.c[k + j] = d.fill_measure[j];
  for (std::size_t i = 0; i < r; ++i) lp.c[2 * k + i] = lp.c[2 * k + r + i] = d.rem_measure[i];
  lp.a.assign(r, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) {
    lp.a[i][2 * k + i] = 1;
    lp.a[i][2 * k + r + i] = -1;
    lp.b.push_back(Rational(d.target[i]));
  }
  for (std::size_t j = 0; j < k; ++j)
    for (const Incidence& f : d.columns[j]) {
      lp.a[f.cell][j] += f.coefficient;
      lp.a[f.cell][k + j] -= f.coefficient;
    }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpSolution::Status::optimal) throw DomainError("flat norm LP failed to solve");
  cert.filling = RationalChain(d.cx, d.m + 1);
  for (std::size_t j = 0; j < k; ++j) cert.filling.set(j, sol.x[j] - sol.x[k + j]);
  cert.remainder = target - boundary(cert.filling);
  const Scalar value = mass(cert.remainder) + mass(cert.filling);
  cert.value = all_exact(t) ? value : Scalar::inexact(value.to_double());
  return cert;
}

FlatCertificate flat_distance_integral(const Chain& t, std::int64_t cap) {
  if (cap < 0) throw DomainError("negative coefficient cap");
  const FlatData d = flat_data(t);
  std::vector<std::int64_t> s(d.fill_cells, 0);
  std::vector<std::int64_t> best_s = s;
  std::optional<Rational> incumbent;

  // Depth-first in lexicographic order; only strict improvements replace the
  // incumbent, so the first optimal filling found is the lexicographic minimum.
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == d.fill_cells) {
      const Rational cost = integral_cost(d, s);
      if (!incumbent || cost < *incumbent) {
        incumbent = cost;
        best_s = s;
      }
      return;
    }
    for (std::int64_t v = -cap; v <= cap; ++v) {
      s[depth] = v;
      if (incumbent) {
        const Rational lb = depth + 1 == d.fill_cells ? integral_cost(d, s) : relaxed_bound(d, s, depth + 1, cap);
        if (lb >= *incumbent) continue;
      }
      self(self, depth + 1);
    }
    s[depth] = 0;
  };
  search(search, 0);
  return certificate(t, d, best_s, cap, nullptr);
}

FlatCertificate h_flat_distance(const Chain& t, const Integrand& h, std::int64_t cap) {
  if (cap < 0) throw DomainError("negative coefficient cap");
  if (!h.valid()) throw DomainError("integrand " + h.describe() + " violates the concave-integrand axioms");
  const FlatData d = flat_data(t);
  std::vector<std::int64_t> s(d.fill_cells, 0);
  std::vector<std::int64_t> best_s = s;
  std::optional<Scalar> incumbent;

  std::vector<Scalar> fill_mu, rem_mu;
  for (std::size_t j = 0; j < d.fill_cells; ++j) fill_mu.push_back(d.cx->cell(d.m + 1, j).measure);
  for (std::size_t i = 0; i < d.rem_cells; ++i) rem_mu.push_back(d.cx->cell(d.m, i).measure);
  // Per remainder cell, how far the free filling coefficients can move it.
  std::vector<std::vector<std::int64_t>> reach(d.fill_cells + 1, std::vector<std::int64_t>(d.rem_cells, 0));
  for (std::size_t j = d.fill_cells; j-- > 0;) {
    reach[j] = reach[j + 1];
    for (const Incidence& f : d.columns[j]) reach[j][f.cell] += std::llabs(f.coefficient) * cap;
  }

  // Exact H-cost of the pinned prefix plus H(distance of each remainder
  // interval from 0): a valid lower bound since H is increasing.
  auto bound = [&](std::size_t fixed) {
    std::vector<std::int64_t> r = d.target;
    Scalar lb;
    for (std::size_t j = 0; j < fixed; ++j) {
      if (s[j] != 0) lb += h(std::llabs(s[j])) * fill_mu[j];
      for (const Incidence& f : d.columns[j]) r[f.cell] -= f.coefficient * s[j];
    }
    for (std::size_t i = 0; i < d.rem_cells; ++i) {
      const std::int64_t gap = std::llabs(r[i]) - reach[fixed][i];
      if (gap > 0) lb += h(gap) * rem_mu[i];
    }
    return lb;
  };

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == d.fill_cells) {
      const Scalar cost = bound(depth);
      if (!incumbent || cost < *incumbent) {
        incumbent = cost;
        best_s = s;
      }
      return;
    }
    for (std::int64_t v = -cap; v <= cap; ++v) {
      s[depth] = v;
      if (incumbent && bound(depth + 1) >= *incumbent) continue;
      self(self, depth + 1);
    }
    s[depth] = 0;
  };
  search(search, 0);
  return certificate(t, d, best_s, cap, &h);
}

}  // namespace pplateau
