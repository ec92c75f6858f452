#include "pplateau/polyhedral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace pplateau {

PolyhedralChain::PolyhedralChain(int ambient_dim, int dim) : ambient_(ambient_dim), dim_(dim) {
  if (ambient_ < 1) throw DomainError("ambient dimension must be positive");
  if (dim_ < -1 || dim_ > ambient_) throw DomainError("simplex dimension exceeds ambient dimension");
}

namespace {

void check_shape(const std::vector<Point>& vs, int ambient, int dim) {
  if (static_cast<int>(vs.size()) != dim + 1) throw DomainError("simplex has the wrong number of vertices");
  for (const Point& p : vs)
    if (static_cast<int>(p.size()) != ambient) throw DomainError("vertex has the wrong ambient dimension");
}

}  // namespace

void PolyhedralChain::add(std::vector<Point> vertices, std::int64_t multiplicity) {
  if (dim_ < 0) throw DomainError("cannot add simplices to a chain of dimension -1");
  check_shape(vertices, ambient_, dim_);
  if (gram_determinant(vertices) == 0) throw DomainError("degenerate simplex");
  if (multiplicity != 0) simplices_.push_back({std::move(vertices), multiplicity});
}

void PolyhedralChain::add_if_nondegenerate(std::vector<Point> vertices, std::int64_t multiplicity) {
  if (dim_ < 0) return;
  check_shape(vertices, ambient_, dim_);
  if (multiplicity == 0 || gram_determinant(vertices) == 0) return;
  simplices_.push_back({std::move(vertices), multiplicity});
}

PolyhedralChain& PolyhedralChain::operator+=(const PolyhedralChain& o) {
  if (o.ambient_ != ambient_ || o.dim_ != dim_) throw DomainError("polyhedral chain shape mismatch");
  simplices_.insert(simplices_.end(), o.simplices_.begin(), o.simplices_.end());
  return *this;
}

PolyhedralChain& PolyhedralChain::operator-=(const PolyhedralChain& o) {
  if (o.ambient_ != ambient_ || o.dim_ != dim_) throw DomainError("polyhedral chain shape mismatch");
  for (const Simplex& s : o.simplices_) simplices_.push_back({s.vertices, -s.multiplicity});
  return *this;
}

Rational gram_determinant(const std::vector<Point>& vs) {
  const std::size_t d = vs.size() - 1;
  if (d == 0) return 1;
  std::vector<Point> edges(d);
  for (std::size_t i = 0; i < d; ++i) {
    edges[i].resize(vs[0].size());
    for (std::size_t k = 0; k < vs[0].size(); ++k) edges[i][k] = vs[i + 1][k] - vs[0][k];
  }
  std::vector<std::vector<Rational>> g(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Rational dot = 0;
      for (std::size_t k = 0; k < edges[i].size(); ++k) dot += edges[i][k] * edges[j][k];
      g[i][j] = dot;
    }
  // Exact Gaussian elimination.
  Rational det = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t pivot = c;
    while (pivot < d && g[pivot][c] == 0) ++pivot;
    if (pivot == d) return 0;
    if (pivot != c) {
      std::swap(g[pivot], g[c]);
      det = -det;
    }
    det *= g[c][c];
    for (std::size_t r = c + 1; r < d; ++r) {
      if (g[r][c] == 0) continue;
      const Rational f = g[r][c] / g[c][c];
      for (std::size_t k = c; k < d; ++k) g[r][k] -= f * g[c][k];
    }
  }
  return det;
}

double volume(const std::vector<Point>& vs) {
  const std::size_t d = vs.size() - 1;
  double fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<double>(i);
  return std::sqrt(std::max(0.0, gram_determinant(vs).convert_to<double>())) / fact;
}

PolyhedralChain canonical(const PolyhedralChain& c) {
  std::map<std::vector<Point>, std::int64_t> acc;
  for (const Simplex& s : c.simplices()) {
    std::vector<std::size_t> order(s.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s.vertices[a] < s.vertices[b]; });
    // Parity of the sorting permutation by cycle decomposition.
    std::vector<bool> seen(order.size(), false);
    int parity = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = order[j]) {
        seen[j] = true;
        ++len;
      }
      parity += static_cast<int>(len - 1);
    }
    std::vector<Point> sorted;
    for (std::size_t i : order) sorted.push_back(s.vertices[i]);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    acc[sorted] += parity % 2 ? -s.multiplicity : s.multiplicity;
  }
  PolyhedralChain out(c.ambient_dim(), c.dim());
  for (auto& [vs, m] : acc)
    if (m != 0) out.add_if_nondegenerate(vs, m);
  return out;
}

bool same_chain(const PolyhedralChain& a, const PolyhedralChain& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim()) return false;
  const auto ca = canonical(a).simplices();
  const auto cb = canonical(b).simplices();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i].vertices != cb[i].vertices || ca[i].multiplicity != cb[i].multiplicity) return false;
  return true;
}

PolyhedralChain boundary(const PolyhedralChain& c) {
  PolyhedralChain out(c.ambient_dim(), c.dim() - 1);
  if (c.dim() <= 0) return out;
  for (const Simplex& s : c.simplices())
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      std::vector<Point> face;
      for (std::size_t j = 0; j < s.vertices.size(); ++j)
        if (j != i) face.push_back(s.vertices[j]);
      out.add_if_nondegenerate(std::move(face), i % 2 ? -s.multiplicity : s.multiplicity);
    }
  return out;
}

PolyhedralChain cone(const PolyhedralChain& z, const Point& v) {
  if (static_cast<int>(v.size()) != z.ambient_dim()) throw DomainError("cone apex has the wrong ambient dimension");
  PolyhedralChain out(z.ambient_dim(), z.dim() + 1);
  if (z.dim() + 1 > z.ambient_dim()) return out;
  for (const Simplex& s : z.simplices()) {
    std::vector<Point> vs;
    vs.push_back(v);
    vs.insert(vs.end(), s.vertices.begin(), s.vertices.end());
    out.add_if_nondegenerate(std::move(vs), s.multiplicity);
  }
  return out;
}

double mass(const PolyhedralChain& c) {
  double sum = 0;
  const PolyhedralChain k = canonical(c);
  for (const Simplex& s : k.simplices())
    sum += static_cast<double>(std::llabs(s.multiplicity)) * volume(s.vertices);
  return sum;
}

double h_mass(const PolyhedralChain& c, const Integrand& h) {
  if (!h.valid()) throw DomainError("integrand " + h.describe() + " violates the concave-integrand axioms");
  double sum = 0;
  const PolyhedralChain k = canonical(c);
  for (const Simplex& s : k.simplices())
    sum += h(std::llabs(s.multiplicity)).to_double() * volume(s.vertices);
  return sum;
}

double max_distance(const PolyhedralChain& c, const Point& v) {
  double best = 0;
  for (const Simplex& s : c.simplices())
    for (const Point& p : s.vertices) {
      double d2 = 0;
      for (std::size_t k = 0; k < p.size(); ++k) {
        const double dx = (p[k] - v[k]).convert_to<double>();
        d2 += dx * dx;
      }
      best = std::max(best, std::sqrt(d2));
    }
  return best;
}

namespace {

PolyhedralChain embed_edges(const Chain& c) {
  const auto& cx = c.complex();
  PolyhedralChain out(cx->ambient_dim(), 1);
  for (const auto& [i, v] : c.terms()) {
    const auto& faces = cx->faces(1, i);
    std::optional<std::size_t> head, tail;
    for (const Incidence& f : faces) {
      if (f.coefficient == 1 && !head) head = f.cell;
      else if (f.coefficient == -1 && !tail) tail = f.cell;
      else throw DomainError("edge '" + cx->cell(1, i).id + "' is not a segment between two vertices");
    }
    if (!head || !tail) throw DomainError("edge '" + cx->cell(1, i).id + "' has no embeddable endpoints");
    out.add({cx->coordinates(*tail), cx->coordinates(*head)}, v);
  }
  return out;
}

}  // namespace

PolyhedralChain embed(const Chain& c) {
  const auto& cx = c.complex();
  if (!cx->has_coordinates()) throw DomainError("embedding needs vertex coordinates");
  switch (c.dim()) {
    case 0: {
      PolyhedralChain out(cx->ambient_dim(), 0);
      for (const auto& [i, v] : c.terms()) out.add({cx->coordinates(i)}, v);
      return out;
    }
    case 1:
      return embed_edges(c);
    case 2: {
      PolyhedralChain out(cx->ambient_dim(), 2);
      for (const auto& [i, v] : c.terms()) {
        Chain cell(cx, 2);
        cell.set(i, 1);
        const PolyhedralChain rim = embed_edges(boundary(cell));
        if (rim.is_zero()) throw DomainError("2-cell '" + cx->cell(2, i).id + "' has an empty boundary");
        PolyhedralChain filled = cone(rim, rim.simplices().front().vertices.front());
        for (const Simplex& s : filled.simplices()) out.add(s.vertices, s.multiplicity * v);
      }
      return canonical(out);
    }
    default:
      throw DomainError("embedding supports chains of dimension 0, 1 and 2");
  }
}

}  // namespace pplateau
