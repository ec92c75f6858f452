#ifndef PPLATEAU_COMPLEX_HPP
#define PPLATEAU_COMPLEX_HPP

#include "pplateau/report.hpp"
#include "pplateau/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pplateau {

struct Cell {
  std::string id;
  Scalar measure;  // d-dimensional volume
  std::string label;
};

struct Incidence {
  std::size_t cell = 0;
  std::int64_t coefficient = 0;
};

class ComplexBuilder;

/**
 * Finite oriented cell complex. Cells are addressed by (dimension, index);
 * indices follow insertion order and define the lexicographic order used
 * for chains. Immutable once built.
 */
class CellComplex {
 public:
  int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t cell_count(int d) const;
  const Cell& cell(int d, std::size_t i) const { return cells_.at(d).at(i); }
  std::optional<std::size_t> find(int d, std::string_view id) const;
  /// Like find() but throws DomainError for unknown ids.
  std::size_t index(int d, std::string_view id) const;

  /// Signed faces of d-cell i (indices into dimension d-1). Empty for d = 0.
  const std::vector<Incidence>& faces(int d, std::size_t i) const;
  /// d-cells having (d-1)-cell i as a face, with the same coefficients.
  const std::vector<Incidence>& cofaces(int d, std::size_t i) const;

  /// Ambient dimension of vertex coordinates; 0 when none were supplied.
  int ambient_dim() const { return ambient_dim_; }
  bool has_coordinates() const { return ambient_dim_ > 0; }
  const std::vector<Rational>& coordinates(std::size_t vertex) const { return coords_.at(vertex); }

 private:
  friend class ComplexBuilder;
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::unordered_map<std::string, std::size_t>> ids_;
  std::vector<std::vector<std::vector<Incidence>>> faces_;    // [d][cell]
  std::vector<std::vector<std::vector<Incidence>>> cofaces_;  // [d][face cell]
  int ambient_dim_ = 0;
  std::vector<std::vector<Rational>> coords_;
};

using ComplexPtr = std::shared_ptr<const CellComplex>;

class ComplexBuilder {
 public:
  explicit ComplexBuilder(int top_dim);

  std::size_t add_cell(int d, std::string id, Scalar measure, std::string label = {});
  /// Adds `sign` to the incidence coefficient of `face` in the boundary of
  /// `cell`; repeated calls accumulate.
  void add_face(int d, std::size_t cell, std::size_t face, std::int64_t sign);
  void add_face(int d, std::string_view cell, std::string_view face, std::int64_t sign);
  void set_coordinates(std::size_t vertex, std::vector<Rational> xs);

  std::size_t cell_count(int d) const { return complex_.cell_count(d); }
  std::optional<std::size_t> find(int d, std::string_view id) const { return complex_.find(d, id); }

  ComplexPtr build();

 private:
  CellComplex complex_;
  std::vector<std::vector<std::map<std::size_t, std::int64_t>>> pending_;
  std::map<std::size_t, std::vector<Rational>> coords_;
};

/// Sparse integer-or-rational coefficients over the d-cells of a complex.
template <class Coeff>
class BasicChain {
 public:
  BasicChain() = default;
  BasicChain(ComplexPtr complex, int dim) : complex_(std::move(complex)), dim_(dim) {
    if (!complex_) throw DomainError("chain without complex");
    if (dim_ < 0 || dim_ > complex_->top_dim())
      throw DomainError("chain dimension " + std::to_string(dim_) + " outside complex range");
  }

  static BasicChain from_dense(ComplexPtr complex, int dim, const std::vector<Coeff>& dense) {
    BasicChain c(std::move(complex), dim);
    for (std::size_t i = 0; i < dense.size(); ++i) c.set(i, dense[i]);
    return c;
  }

  const ComplexPtr& complex() const { return complex_; }
  int dim() const { return dim_; }
  std::size_t cell_count() const { return complex_ ? complex_->cell_count(dim_) : 0; }

  Coeff operator[](std::size_t cell) const {
    auto it = terms_.find(cell);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void set(std::size_t cell, const Coeff& v) {
    if (cell >= cell_count()) throw DomainError("chain cell index out of range");
    if (v == 0)
      terms_.erase(cell);
    else
      terms_[cell] = v;
  }

  void add(std::size_t cell, const Coeff& v) { set(cell, (*this)[cell] + v); }

  const std::map<std::size_t, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::vector<Coeff> dense() const {
    std::vector<Coeff> out(cell_count(), Coeff(0));
    for (const auto& [i, v] : terms_) out[i] = v;
    return out;
  }

  BasicChain& operator+=(const BasicChain& o) {
    require_compatible(o);
    for (const auto& [i, v] : o.terms_) add(i, v);
    return *this;
  }
  BasicChain& operator-=(const BasicChain& o) {
    require_compatible(o);
    for (const auto& [i, v] : o.terms_) add(i, -v);
    return *this;
  }
  BasicChain& operator*=(const Coeff& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [i, v] : terms_) v *= k;
    }
    return *this;
  }

  friend BasicChain operator+(BasicChain a, const BasicChain& b) { return a += b; }
  friend BasicChain operator-(BasicChain a, const BasicChain& b) { return a -= b; }
  friend BasicChain operator*(const Coeff& k, BasicChain a) { return a *= k; }
  BasicChain operator-() const { return Coeff(-1) * *this; }

  friend bool operator==(const BasicChain& a, const BasicChain& b) {
    return a.complex_ == b.complex_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  void require_compatible(const BasicChain& o) const {
    if (complex_ != o.complex_) throw DomainError("chains live on different complexes");
    if (dim_ != o.dim_) throw DomainError("chain dimension mismatch");
  }

 private:
  ComplexPtr complex_;
  int dim_ = 0;
  std::map<std::size_t, Coeff> terms_;
};

using Chain = BasicChain<std::int64_t>;
using RationalChain = BasicChain<Rational>;

/// Lexicographic order of dense coefficient vectors in cell order.
bool lex_less(const Chain& a, const Chain& b);

/// Discrete differential form: one real value per oriented d-cell.
class Cochain {
 public:
  Cochain() = default;
  Cochain(ComplexPtr complex, int dim);

  const ComplexPtr& complex() const { return complex_; }
  int dim() const { return dim_; }
  Scalar operator[](std::size_t cell) const;
  void set(std::size_t cell, Scalar v);
  const std::map<std::size_t, Scalar>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

 private:
  ComplexPtr complex_;
  int dim_ = 0;
  std::map<std::size_t, Scalar> values_;
};

template <class Coeff>
BasicChain<Coeff> boundary(const BasicChain<Coeff>& c) {
  const auto& cx = c.complex();
  if (c.dim() == 0) return BasicChain<Coeff>(cx, 0);
  BasicChain<Coeff> out(cx, c.dim() - 1);
  for (const auto& [i, v] : c.terms())
    for (const Incidence& f : cx->faces(c.dim(), i)) out.add(f.cell, Coeff(f.coefficient) * v);
  return out;
}

/// Σ_σ c(σ)·φ(σ).
Scalar pair(const Cochain& phi, const Chain& c);

/// ∂∂ = 0, measures, incidence regularity. Empty report means valid.
Report validate(const CellComplex& complex);

}  // namespace pplateau

#endif
