#include "pplateau/solver.hpp"

#include "pplateau/subcurrent.hpp"

#include <algorithm>
#include <cstdlib>

namespace pplateau {

Problem make_problem(const Chain& b, const Cochain& phi, std::optional<Chain> t0, Integrand h) {
  Problem p;
  p.complex = b.complex();
  p.m = b.dim() + 1;
  p.boundary_limit = b;
  p.phi = phi;
  p.t0 = t0 ? *t0 : Chain(b.complex(), p.m);
  p.h = std::move(h);
  check_problem(p);
  return p;
}

void check_problem(const Problem& p) {
  if (!p.complex) throw DomainError("problem without complex");
  if (p.m < 1 || p.m > p.complex->top_dim()) throw DomainError("problem dimension m out of range");
  if (p.boundary_limit.complex() != p.complex || p.t0.complex() != p.complex || p.phi.complex() != p.complex)
    throw DomainError("B, T0 and phi must live on the problem complex");
  if (p.boundary_limit.dim() != p.m - 1) throw DomainError("B must have dimension m - 1");
  if (p.t0.dim() != p.m) throw DomainError("T0 must have dimension m");
  if (p.phi.dim() != p.m - 1) throw DomainError("phi must have dimension m - 1");
  if (!p.h.valid()) throw DomainError("integrand " + p.h.describe() + " violates the concave-integrand axioms");
  if (p.caps && p.caps->size() != p.complex->cell_count(p.m))
    throw DomainError("cap vector length does not match the number of m-cells");
  if (p.caps)
    for (auto c : *p.caps)
      if (c < 0) throw DomainError("negative cap");
}

std::vector<std::int64_t> derive_bounds(const Problem& p) {
  check_problem(p);
  const Scalar budget = h_mass(p.t0, p.h) + mass(p.boundary_limit) * comass(p.phi) +
                        abs(pair(p.phi, boundary(p.t0)));
  std::vector<std::int64_t> caps;
  for (std::size_t i = 0; i < p.complex->cell_count(p.m); ++i) {
    const Cell& c = p.complex->cell(p.m, i);
    if (c.measure.is_zero())
      throw DomainError("derive_bounds: zero-measure " + std::to_string(p.m) + "-cell '" + c.id +
                        "' needs an explicit cap");
    caps.push_back(p.h.upper_inverse(budget / c.measure));
  }
  return caps;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

struct Row {
  std::size_t face = 0;          // the (m-1)-cell
  std::vector<Incidence> terms;  // (m-cell, coefficient)
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

class BranchAndBound {
 public:
  BranchAndBound(const Problem& p, std::vector<std::int64_t> caps) : p_(p), caps_(std::move(caps)) {
    const std::size_t n = caps_.size();
    const BoundaryBox box = boundary_box(p.boundary_limit, p.t0);
    for (std::size_t t = 0; t < box.cells.size(); ++t) {
      Row row;
      row.face = t;
      row.terms = p.complex->cofaces(p.m, t);
      row.lo = box.cells[t].lo;
      row.hi = box.cells[t].hi;
      if (row.terms.empty()) {
        if (row.lo > 0 || row.hi < 0) infeasible_ = true;
        continue;
      }
      rows_.push_back(std::move(row));
    }

    // Separable objective: f_σ(t) = H(|t|)·μ(σ) - t·∂σ(φ).
    mu_.resize(n);
    g_.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
      mu_[s] = p.complex->cell(p.m, s).measure;
      for (const Incidence& f : p.complex->faces(p.m, s)) g_[s] += Scalar(f.coefficient) * p.phi[f.cell];
    }
  }

  void run() {
    if (infeasible_) return;
    std::vector<std::int64_t> lo(caps_.size()), hi(caps_.size());
    for (std::size_t s = 0; s < caps_.size(); ++s) {
      lo[s] = -caps_[s];
      hi[s] = caps_[s];
    }
    node(lo, hi);
  }

  const std::vector<std::vector<std::int64_t>>& minimizers() const { return found_; }
  bool truncated() const { return truncated_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  Scalar mass_part(std::size_t s, std::int64_t t) const { return p_.h(t < 0 ? -t : t) * mu_[s]; }
  Scalar f(std::size_t s, std::int64_t t) const { return mass_part(s, t) - Scalar(t) * g_[s]; }

  bool propagate(std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Row& row : rows_) {
        std::int64_t mn = 0, mx = 0;
        for (const Incidence& in : row.terms) {
          const std::int64_t a = in.coefficient;
          mn += a > 0 ? a * lo[in.cell] : a * hi[in.cell];
          mx += a > 0 ? a * hi[in.cell] : a * lo[in.cell];
        }
        if (mn > row.hi || mx < row.lo) return false;
        for (const Incidence& in : row.terms) {
          const std::int64_t a = in.coefficient;
          const std::size_t s = in.cell;
          const std::int64_t own_min = a > 0 ? a * lo[s] : a * hi[s];
          const std::int64_t own_max = a > 0 ? a * hi[s] : a * lo[s];
          const std::int64_t lo_a = row.lo - (mx - own_max);  // a·x >= lo_a
          const std::int64_t hi_a = row.hi - (mn - own_min);  // a·x <= hi_a
          std::int64_t nlo, nhi;
          if (a > 0) {
            nlo = ceil_div(lo_a, a);
            nhi = floor_div(hi_a, a);
          } else {
            nlo = ceil_div(hi_a, a);
            nhi = floor_div(lo_a, a);
          }
          if (nlo > lo[s]) {
            lo[s] = nlo;
            changed = true;
          }
          if (nhi < hi[s]) {
            hi[s] = nhi;
            changed = true;
          }
          if (lo[s] > hi[s]) return false;
        }
      }
    }
    return true;
  }

  bool rows_hold(const std::vector<std::int64_t>& x) const {
    for (const Row& row : rows_) {
      std::int64_t v = 0;
      for (const Incidence& in : row.terms) v += in.coefficient * x[in.cell];
      if (v < row.lo || v > row.hi) return false;
    }
    return true;
  }

  // f is concave on each side of 0, so its minimum over an interval sits at
  // an endpoint or at one of -1, 0, 1.
  Scalar interval_min(std::size_t s, std::int64_t lo, std::int64_t hi) const {
    Scalar best = min(f(s, lo), f(s, hi));
    for (std::int64_t t : {-1, 0, 1})
      if (lo < t && t < hi) best = min(best, f(s, t));
    return best;
  }

  // Larger of the separable bound and M_H lower bound plus the pairing range
  // allowed by the boundary rows; the second one sees cycle cancellation.
  Scalar lower_bound(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) const {
    Scalar separable, coupled;
    for (std::size_t s = 0; s < lo.size(); ++s) {
      separable += interval_min(s, lo[s], hi[s]);
      const std::int64_t nearest = lo[s] > 0 ? lo[s] : (hi[s] < 0 ? hi[s] : 0);
      coupled += mass_part(s, nearest);
    }
    for (const Row& row : rows_) {
      const Scalar& w = p_.phi[row.face];
      if (w.is_zero()) continue;
      std::int64_t mn = 0, mx = 0;
      for (const Incidence& in : row.terms) {
        const std::int64_t a = in.coefficient;
        mn += a > 0 ? a * lo[in.cell] : a * hi[in.cell];
        mx += a > 0 ? a * hi[in.cell] : a * lo[in.cell];
      }
      mn = std::max(mn, row.lo);
      mx = std::min(mx, row.hi);
      coupled -= max(w * Scalar(mn), w * Scalar(mx));
    }
    return max(separable, coupled);
  }

  // Prune when the bound cannot reach the incumbent, or can only tie with it
  // and the minimizer list is already full.
  bool prunable(const Scalar& lb) const {
    if (!best_) return false;
    const int c = compare(lb, *best_);
    return c > 0 || (c == 0 && found_.size() >= p_.max_minimizers);
  }

  void record(const std::vector<std::int64_t>& x) {
    Scalar e;
    for (std::size_t s = 0; s < x.size(); ++s) e += f(s, x[s]);
    if (!best_ || compare(e, *best_) < 0) {
      best_ = e;
      found_.assign(1, x);
      truncated_ = false;
    } else if (compare(e, *best_) == 0) {
      if (found_.size() < p_.max_minimizers)
        found_.push_back(x);
      else
        truncated_ = true;
    }
  }

  void node(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi) {
    ++nodes_;
    if (!propagate(lo, hi)) return;
    if (prunable(lower_bound(lo, hi))) return;

    std::vector<std::size_t> free;
    std::uint64_t points = 1;
    for (std::size_t s = 0; s < lo.size(); ++s)
      if (lo[s] < hi[s]) {
        free.push_back(s);
        points = points > p_.exhaustive_threshold ? points : points * static_cast<std::uint64_t>(hi[s] - lo[s] + 1);
      }
    if (free.empty()) {
      record(lo);
      return;
    }
    if (points <= p_.exhaustive_threshold) {
      enumerate(lo, hi, free);
      return;
    }
    // Children in increasing order of the first free cell keep the visit
    // order lexicographic.
    const std::size_t s = free.front();
    std::vector<std::pair<std::int64_t, std::int64_t>> parts;
    if (lo[s] < 0 && hi[s] > 0) {
      parts = {{lo[s], -1}, {0, 0}, {1, hi[s]}};
    } else if (hi[s] - lo[s] < 4) {
      for (std::int64_t v = lo[s]; v <= hi[s]; ++v) parts.emplace_back(v, v);
    } else {
      const std::int64_t mid = lo[s] + (hi[s] - lo[s]) / 2;
      parts = {{lo[s], mid}, {mid + 1, hi[s]}};
    }
    for (const auto& [a, b] : parts) {
      auto clo = lo, chi = hi;
      clo[s] = a;
      chi[s] = b;
      node(std::move(clo), std::move(chi));
    }
  }

  void enumerate(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                 const std::vector<std::size_t>& free) {
    std::vector<std::int64_t> x = lo;
    for (;;) {
      ++nodes_;
      if (rows_hold(x)) record(x);
      std::size_t k = free.size();
      while (k > 0) {
        const std::size_t s = free[k - 1];
        if (x[s] < hi[s]) {
          ++x[s];
          break;
        }
        x[s] = lo[s];
        --k;
      }
      if (k == 0) return;
    }
  }

  const Problem& p_;
  std::vector<std::int64_t> caps_;
  std::vector<Row> rows_;
  std::vector<Scalar> mu_, g_;
  bool infeasible_ = false;
  std::optional<Scalar> best_;
  std::vector<std::vector<std::int64_t>> found_;
  bool truncated_ = false;
  std::uint64_t nodes_ = 0;
};

Solution finish(const Problem& p, const std::vector<std::vector<std::int64_t>>& found, std::vector<std::int64_t> caps) {
  if (found.empty()) throw DomainError("problem is infeasible within the coefficient caps (T0 excluded)");
  Solution s;
  for (const auto& x : found) s.minimizers.push_back(Chain::from_dense(p.complex, p.m, x));
  s.value = energy(s.minimizers.front(), p.phi, p.h);
  s.caps = std::move(caps);
  return s;
}

}  // namespace

Solution solve(const Problem& p) {
  check_problem(p);
  std::vector<std::int64_t> caps;
  bool bounds_active = false;
  if (p.caps) {
    caps = *p.caps;
    try {
      const auto derived = derive_bounds(p);
      for (std::size_t i = 0; i < caps.size(); ++i)
        if (caps[i] < derived[i]) bounds_active = true;
    } catch (const DomainError&) {
      bounds_active = true;
    }
  } else {
    caps = derive_bounds(p);
  }
  BranchAndBound bb(p, caps);
  bb.run();
  Solution s = finish(p, bb.minimizers(), std::move(caps));
  s.bounds_active = bounds_active;
  s.truncated = bb.truncated();
  s.nodes = bb.nodes();
  s.certificate = certify(p, s);
  return s;
}

Solution exhaustive_oracle(const Problem& p, const std::vector<std::int64_t>& caps) {
  check_problem(p);
  const std::size_t n = p.complex->cell_count(p.m);
  if (caps.size() != n) throw DomainError("oracle cap vector length mismatch");
  double points = 1;
  for (auto c : caps) {
    if (c < 0) throw DomainError("negative cap");
    points *= static_cast<double>(2 * c + 1);
  }
  if (points > 1e8) throw DomainError("oracle search space too large");

  const std::size_t nb = p.complex->cell_count(p.m - 1);
  const std::vector<std::int64_t> b = p.boundary_limit.dense();
  std::vector<Scalar> mu(nb);
  for (std::size_t t = 0; t < nb; ++t) mu[t] = p.complex->cell(p.m - 1, t).measure;

  // bd = ∂x - ∂T0, maintained incrementally as the odometer moves.
  std::vector<std::int64_t> x(n);
  std::vector<std::int64_t> bd = (-boundary(p.t0)).dense();
  for (std::size_t s = 0; s < n; ++s) {
    x[s] = -caps[s];
    for (const Incidence& f : p.complex->faces(p.m, s)) bd[f.cell] += f.coefficient * x[s];
  }

  std::optional<Scalar> best;
  std::vector<std::vector<std::int64_t>> found;
  bool truncated = false;
  for (;;) {
    // Mass identity M(B) = M(B - A) + M(A) with A = ∂(T - T0).
    Scalar excess;
    for (std::size_t t = 0; t < nb; ++t) {
      const std::int64_t k = std::llabs(b[t] - bd[t]) + std::llabs(bd[t]) - std::llabs(b[t]);
      if (k != 0) excess += Scalar(k) * mu[t];
    }
    if (excess.is_zero()) {
      const Chain t = Chain::from_dense(p.complex, p.m, x);
      const Scalar e = energy(t, p.phi, p.h).energy;
      if (!best || e < *best) {
        best = e;
        found.assign(1, x);
        truncated = false;
      } else if (e == *best) {
        if (found.size() < p.max_minimizers)
          found.push_back(x);
        else
          truncated = true;
      }
    }
    std::size_t k = n;
    while (k > 0) {
      const std::size_t s = k - 1;
      if (x[s] < caps[s]) {
        ++x[s];
        for (const Incidence& f : p.complex->faces(p.m, s)) bd[f.cell] += f.coefficient;
        break;
      }
      for (const Incidence& f : p.complex->faces(p.m, s)) bd[f.cell] -= f.coefficient * 2 * caps[s];
      x[s] = -caps[s];
      --k;
    }
    if (k == 0) break;
  }
  Solution s = finish(p, found, caps);
  s.truncated = truncated;
  s.nodes = static_cast<std::uint64_t>(points);
  return s;
}

Solution exhaustive_oracle(const Problem& p, std::int64_t cap) {
  return exhaustive_oracle(p, std::vector<std::int64_t>(p.complex->cell_count(p.m), cap));
}

Report certify(const Problem& p, const Solution& s) {
  Report report;
  auto flag = [&](std::string kind, std::string msg) {
    report.push_back({Issue::Severity::error, std::move(kind), std::move(msg)});
  };
  if (s.value.energy != s.value.h_mass - s.value.pairing)
    flag("energy-decomposition", "reported energy differs from h_mass - pairing");
  if (s.minimizers.empty()) flag("no-minimizer", "solution lists no minimizer");
  for (std::size_t i = 0; i < s.minimizers.size(); ++i) {
    const Chain& t = s.minimizers[i];
    if (t.complex() != p.complex || t.dim() != p.m) {
      flag("wrong-shape", "minimizer " + std::to_string(i) + " is not an m-chain on the problem complex");
      continue;
    }
    if (!is_subcurrent(boundary(t - p.t0), p.boundary_limit))
      flag("infeasible-minimizer", "minimizer " + std::to_string(i) + ": boundary(T - T0) is not a subcurrent of B");
    const EnergyValue e = energy(t, p.phi, p.h);
    if (e.energy != s.value.energy)
      flag("energy-mismatch", "minimizer " + std::to_string(i) + " has energy " + e.energy.str() +
                                  ", reported " + s.value.energy.str());
  }
  bool t0_in_box = s.caps.size() == p.complex->cell_count(p.m);
  for (std::size_t i = 0; t0_in_box && i < s.caps.size(); ++i)
    if (std::llabs(p.t0[i]) > s.caps[i]) t0_in_box = false;
  if (t0_in_box && s.value.energy > energy(p.t0, p.phi, p.h).energy)
    flag("worse-than-t0", "reported minimum exceeds E(T0)");
  return report;
}

}  // namespace pplateau
