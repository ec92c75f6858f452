#include "support.hpp"

#include "pplateau/subcurrent.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace testsupport {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational random_measure(Rng& rng) { return Rational(uniform_int(rng, 1, 6), 2); }

ComplexPtr random_complex(Rng& rng, int top_dim, std::size_t max_cells, std::size_t max_top) {
  for (;;) {
    const int nv = static_cast<int>(uniform_int(rng, 3, top_dim == 2 ? 4 : 5));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nv; ++i)
      for (int j = i + 1; j < nv; ++j)
        if (uniform_int(rng, 0, 9) < 7) edges.emplace_back(i, j);
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<std::array<int, 3>> tris;
    if (top_dim == 2) {
      auto has = [&](int a, int b) { return std::find(edges.begin(), edges.end(), std::pair{a, b}) != edges.end(); };
      for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
          for (int k = j + 1; k < nv; ++k)
            if (has(i, j) && has(j, k) && has(i, k) && uniform_int(rng, 0, 9) < 8) tris.push_back({i, j, k});
      while (tris.size() > max_top || nv + edges.size() + tris.size() > max_cells) tris.pop_back();
      if (tris.empty()) continue;
    } else {
      if (edges.empty()) continue;
      while (edges.size() > max_top || nv + edges.size() > max_cells) edges.pop_back();
    }
    std::sort(edges.begin(), edges.end());
    ComplexBuilder b(top_dim);
    for (int i = 0; i < nv; ++i) b.add_cell(0, "v" + std::to_string(i), Scalar(random_measure(rng)));
    auto eid = [](int i, int j) { return "e" + std::to_string(i) + std::to_string(j); };
    for (auto [i, j] : edges) {
      b.add_cell(1, eid(i, j), Scalar(random_measure(rng)));
      b.add_face(1, eid(i, j), "v" + std::to_string(j), 1);
      b.add_face(1, eid(i, j), "v" + std::to_string(i), -1);
    }
    for (auto [i, j, k] : tris) {
      const std::string id = "t" + std::to_string(i) + std::to_string(j) + std::to_string(k);
      b.add_cell(2, id, Scalar(random_measure(rng)));
      b.add_face(2, id, eid(j, k), 1);
      b.add_face(2, id, eid(i, k), -1);
      b.add_face(2, id, eid(i, j), 1);
    }
    return b.build();
  }
}

Chain random_chain(Rng& rng, const ComplexPtr& cx, int dim, std::int64_t limit) {
  Chain c(cx, dim);
  for (std::size_t i = 0; i < cx->cell_count(dim); ++i)
    if (uniform_int(rng, 0, 2) > 0) c.set(i, uniform_int(rng, -limit, limit));
  return c;
}

Cochain random_cochain(Rng& rng, const ComplexPtr& cx, int dim) {
  Cochain phi(cx, dim);
  for (std::size_t i = 0; i < cx->cell_count(dim); ++i) phi.set(i, Scalar(Rational(uniform_int(rng, -8, 8), 2)));
  return phi;
}

Integrand random_table(Rng& rng) {
  std::vector<std::pair<Rational, Rational>> pts{{0, 0}, {1, 1}};
  Rational slope(1), theta(1), value(1);
  const int extra = static_cast<int>(uniform_int(rng, 1, 4));
  for (int k = 0; k < extra; ++k) {
    theta += Rational(uniform_int(rng, 1, 8), 2);
    slope *= Rational(uniform_int(rng, 1, 4), 5);  // strictly decreasing, positive
    value += slope * (theta - pts.back().first);
    pts.emplace_back(theta, value);
  }
  return Integrand::table(pts);
}

RandomProblem random_problem(Rng& rng, std::int64_t max_cap, bool zero_phi) {
  const int m = static_cast<int>(uniform_int(rng, 1, 2));
  const ComplexPtr cx = random_complex(rng, m);
  const Chain b = random_chain(rng, cx, m - 1, 2);
  const Cochain phi = zero_phi ? Cochain(cx, m - 1) : random_cochain(rng, cx, m - 1);
  std::optional<Chain> t0;
  if (uniform_int(rng, 0, 3) == 0) t0 = random_chain(rng, cx, m, 1);
  static const Integrand hs[] = {Integrand::identity(), Integrand::alpha(Rational(1, 2)), Integrand::alpha(Rational(1, 4))};
  Problem p = make_problem(b, phi, t0, hs[uniform_int(rng, 0, 2)]);
  std::vector<std::int64_t> caps(cx->cell_count(m));
  for (auto& c : caps) c = uniform_int(rng, 1, max_cap);
  // Keep T0 inside the box so the instance is feasible.
  for (const auto& [i, v] : p.t0.terms()) caps[i] = std::max<std::int64_t>(caps[i], v < 0 ? -v : v);
  p.caps = caps;
  return {std::move(p), caps};
}

BruteResult brute_solve(const Problem& p, const std::vector<std::int64_t>& caps) {
  const std::size_t n = caps.size();
  std::vector<std::int64_t> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -caps[i];
  BruteResult best;
  bool have = false;
  for (;;) {
    const Chain t = Chain::from_dense(p.complex, p.m, x);
    if (is_subcurrent(boundary(Chain(t - p.t0)), p.boundary_limit)) {
      const Scalar e = energy(t, p.phi, p.h).energy;
      if (!have || e < best.value) {
        best.value = e;
        best.minimizers.clear();
        have = true;
      }
      if (e == best.value) best.minimizers.push_back(t);
    }
    std::size_t k = 0;
    while (k < n && x[k] == caps[k]) {
      x[k] = -caps[k];
      ++k;
    }
    if (k == n) break;
    ++x[k];
  }
  std::sort(best.minimizers.begin(), best.minimizers.end(), lex_less);
  return best;
}

Scalar brute_flat(const Chain& t, const Integrand& h, std::int64_t cap, Chain* first) {
  const ComplexPtr& cx = t.complex();
  const int up = t.dim() + 1;
  const std::size_t n = cx->cell_count(up);
  auto cost = [&](const Chain& c) {
    Scalar s(0);
    for (const auto& [i, v] : c.terms()) s += h(std::llabs(v)) * cx->cell(c.dim(), i).measure;
    return s;
  };
  std::vector<std::int64_t> x(n, -cap);
  std::optional<Scalar> best;
  std::vector<std::vector<std::int64_t>> minimizers;
  for (;;) {
    const Chain s = Chain::from_dense(cx, up, x);
    const Scalar v = cost(t - boundary(s)) + cost(s);
    if (!best || v < *best) {
      best = v;
      minimizers.clear();
    }
    if (v == *best) minimizers.push_back(x);
    // Last coordinate varies fastest so the visit order is lexicographic.
    std::size_t k = n;
    while (k > 0 && x[k - 1] == cap) x[--k] = -cap;
    if (k == 0) break;
    ++x[k - 1];
  }
  if (first) *first = Chain::from_dense(cx, up, minimizers.front());
  return *best;
}

namespace {

// Solves the square system exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

Rational brute_flat_real(const Chain& t) {
  const ComplexPtr& cx = t.complex();
  const int m = t.dim();
  const std::size_t p = cx->cell_count(m + 1);
  const std::size_t q = cx->cell_count(m);
  auto cost = [&](const std::vector<Rational>& s) {
    Rational total = 0;
    std::vector<Rational> r(q);
    for (std::size_t i = 0; i < q; ++i) r[i] = Rational(t[i]);
    for (std::size_t j = 0; j < p; ++j) {
      total += abs(s[j]) * cx->cell(m + 1, j).measure.to_rational();
      for (const Incidence& f : cx->faces(m + 1, j)) r[f.cell] -= Rational(f.coefficient) * s[j];
    }
    for (std::size_t i = 0; i < q; ++i) total += abs(r[i]) * cx->cell(m, i).measure.to_rational();
    return total;
  };
  if (p == 0) return cost({});
  // Hyperplanes: rows 0..p-1 are S_j = 0, rows p.. are (∂S)_i = T_i.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t j = 0; j < p; ++j) {
    std::vector<Rational> r(p, Rational(0));
    r[j] = 1;
    rows.push_back(r);
    rhs.push_back(0);
  }
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<Rational> r(p, Rational(0));
    for (std::size_t j = 0; j < p; ++j)
      for (const Incidence& f : cx->faces(m + 1, j))
        if (f.cell == i) r[j] += Rational(f.coefficient);
    rows.push_back(r);
    rhs.push_back(Rational(t[i]));
  }
  std::optional<Rational> best;
  std::vector<std::size_t> pick(p);
  std::vector<bool> mask(rows.size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(p), true);
  // Visit every p-subset of hyperplanes.
  std::sort(mask.begin(), mask.end());
  do {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (mask[k]) {
        a.push_back(rows[k]);
        b.push_back(rhs[k]);
      }
    if (auto s = solve_square(a, b)) {
      const Rational c = cost(*s);
      if (!best || c < *best) best = c;
    }
  } while (std::next_permutation(mask.begin(), mask.end()));
  return *best;
}

Point random_point(Rng& rng, int ambient) {
  Point p(ambient);
  for (auto& x : p) x = Rational(uniform_int(rng, -400, 400), uniform_int(rng, 50, 113));
  return p;
}

PolyhedralChain random_polyhedral(Rng& rng, int ambient, int dim, int simplices) {
  PolyhedralChain z(ambient, dim);
  // Reuse vertices so that some faces are shared and cancel in ∂Z.
  std::vector<Point> pool;
  for (int i = 0; i < dim + 3; ++i) pool.push_back(random_point(rng, ambient));
  while (static_cast<int>(z.simplices().size()) < simplices) {
    std::vector<Point> vs;
    std::vector<std::size_t> idx(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int k = 0; k <= dim; ++k) vs.push_back(pool[idx[k]]);
    std::int64_t mult = uniform_int(rng, 1, 3) * (uniform_int(rng, 0, 1) ? 1 : -1);
    z.add_if_nondegenerate(vs, mult);
  }
  return z;
}

}  // namespace testsupport
