#ifndef PPLATEAU_POLYHEDRAL_HPP
#define PPLATEAU_POLYHEDRAL_HPP

#include "pplateau/complex.hpp"
#include "pplateau/functionals.hpp"
#include "pplateau/scalar.hpp"

#include <cstdint>
#include <vector>

namespace pplateau {

using Point = std::vector<Rational>;

/// Oriented simplex [p0, ..., pd] with integer multiplicity.
struct Simplex {
  std::vector<Point> vertices;
  std::int64_t multiplicity = 1;
};

/**
 * Integer combination of oriented d-simplices in R^n with exact rational
 * vertex coordinates. Every stored simplex has positive d-volume.
 * Dimension -1 denotes the (zero) boundary of a 0-chain.
 */
class PolyhedralChain {
 public:
  PolyhedralChain(int ambient_dim, int dim);

  /// Throws DomainError for a degenerate simplex or wrong vertex count.
  void add(std::vector<Point> vertices, std::int64_t multiplicity);
  /// Like add() but silently drops degenerate simplices.
  void add_if_nondegenerate(std::vector<Point> vertices, std::int64_t multiplicity);

  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  bool is_zero() const { return simplices_.empty(); }

  PolyhedralChain& operator+=(const PolyhedralChain& o);
  PolyhedralChain& operator-=(const PolyhedralChain& o);
  friend PolyhedralChain operator+(PolyhedralChain a, const PolyhedralChain& b) { return a += b; }
  friend PolyhedralChain operator-(PolyhedralChain a, const PolyhedralChain& b) { return a -= b; }

 private:
  int ambient_;
  int dim_;
  std::vector<Simplex> simplices_;
};

/// Gram determinant of the edge vectors; zero iff the simplex is degenerate.
Rational gram_determinant(const std::vector<Point>& vertices);
/// d-dimensional volume.
double volume(const std::vector<Point>& vertices);

/// Sorted vertices (orientation folded into the sign), equal simplices merged,
/// zero terms removed. Two chains are equal as simplicial chains iff their
/// canonical forms are identical.
PolyhedralChain canonical(const PolyhedralChain& c);
bool same_chain(const PolyhedralChain& a, const PolyhedralChain& b);

/// Simplicial boundary: ∂[p0..pd] = Σ (-1)^i [p0..^pi..pd].
PolyhedralChain boundary(const PolyhedralChain& c);

/// Join with v: v××[p0..pd] = [v, p0, ..., pd], so that
/// ∂(v××Z) = Z - v××∂Z. Degenerate joins are dropped.
PolyhedralChain cone(const PolyhedralChain& z, const Point& v);

double mass(const PolyhedralChain& c);
double h_mass(const PolyhedralChain& c, const Integrand& h);
/// Largest distance from v to a vertex of the support.
double max_distance(const PolyhedralChain& c, const Point& v);

/// Straight-line embedding of a 0-, 1- or 2-chain of a complex that carries
/// vertex coordinates; 2-cells are filled by coning their boundary from one
/// of their vertices.
PolyhedralChain embed(const Chain& c);

}  // namespace pplateau

#endif
