#include "pplateau/complex.hpp"

#include <algorithm>

namespace pplateau {

std::size_t CellComplex::cell_count(int d) const {
  if (d < 0 || d > top_dim()) return 0;
  return cells_[d].size();
}

std::optional<std::size_t> CellComplex::find(int d, std::string_view id) const {
  if (d < 0 || d > top_dim()) return std::nullopt;
  auto it = ids_[d].find(std::string(id));
  if (it == ids_[d].end()) return std::nullopt;
  return it->second;
}

std::size_t CellComplex::index(int d, std::string_view id) const {
  if (auto i = find(d, id)) return *i;
  throw DomainError("unknown " + std::to_string(d) + "-cell '" + std::string(id) + "'");
}

const std::vector<Incidence>& CellComplex::faces(int d, std::size_t i) const {
  static const std::vector<Incidence> kNone;
  if (d <= 0) return kNone;
  return faces_.at(d).at(i);
}

const std::vector<Incidence>& CellComplex::cofaces(int d, std::size_t i) const {
  static const std::vector<Incidence> kNone;
  if (d <= 0 || d > top_dim()) return kNone;
  return cofaces_.at(d).at(i);
}

ComplexBuilder::ComplexBuilder(int top_dim) {
  if (top_dim < 0) throw DomainError("complex dimension must be nonnegative");
  complex_.cells_.resize(top_dim + 1);
  complex_.ids_.resize(top_dim + 1);
  pending_.resize(top_dim + 1);
}

std::size_t ComplexBuilder::add_cell(int d, std::string id, Scalar measure, std::string label) {
  if (d < 0 || d > complex_.top_dim()) throw DomainError("cell dimension out of range");
  if (measure.sign() < 0) throw DomainError("negative measure on cell '" + id + "'");
  if (id.empty()) throw DomainError("empty cell id");
  auto& ids = complex_.ids_[d];
  if (ids.count(id)) throw DomainError("duplicate " + std::to_string(d) + "-cell id '" + id + "'");
  const std::size_t index = complex_.cells_[d].size();
  ids.emplace(id, index);
  complex_.cells_[d].push_back(Cell{std::move(id), std::move(measure), std::move(label)});
  pending_[d].emplace_back();
  return index;
}

void ComplexBuilder::add_face(int d, std::size_t cell, std::size_t face, std::int64_t sign) {
  if (d < 1 || d > complex_.top_dim()) throw DomainError("face relation needs 1 <= d <= top dimension");
  if (cell >= complex_.cell_count(d) || face >= complex_.cell_count(d - 1))
    throw DomainError("face relation references a missing cell");
  auto& row = pending_[d][cell];
  row[face] += sign;
  if (row[face] == 0) row.erase(face);
}

void ComplexBuilder::add_face(int d, std::string_view cell, std::string_view face, std::int64_t sign) {
  add_face(d, complex_.index(d, cell), complex_.index(d - 1, face), sign);
}

void ComplexBuilder::set_coordinates(std::size_t vertex, std::vector<Rational> xs) {
  if (vertex >= complex_.cell_count(0)) throw DomainError("coordinates for a missing vertex");
  if (xs.empty()) throw DomainError("empty coordinate tuple");
  if (!coords_.empty() && coords_.begin()->second.size() != xs.size())
    throw DomainError("inconsistent ambient dimension in vertex coordinates");
  coords_[vertex] = std::move(xs);
}

ComplexPtr ComplexBuilder::build() {
  CellComplex cx = complex_;
  const int n = cx.top_dim();
  cx.faces_.assign(n + 1, {});
  cx.cofaces_.assign(n + 1, {});
  for (int d = 1; d <= n; ++d) {
    cx.faces_[d].resize(cx.cells_[d].size());
    cx.cofaces_[d].resize(cx.cells_[d - 1].size());
    for (std::size_t i = 0; i < cx.cells_[d].size(); ++i) {
      for (const auto& [face, coeff] : pending_[d][i]) {
        cx.faces_[d][i].push_back({face, coeff});
        cx.cofaces_[d][face].push_back({i, coeff});
      }
    }
  }
  if (!coords_.empty()) {
    if (coords_.size() != cx.cell_count(0))
      throw DomainError("coordinates must be given for every vertex or none");
    cx.ambient_dim_ = static_cast<int>(coords_.begin()->second.size());
    for (auto& [v, xs] : coords_) cx.coords_.push_back(xs);
  }
  return std::make_shared<const CellComplex>(std::move(cx));
}

bool lex_less(const Chain& a, const Chain& b) {
  a.require_compatible(b);
  const auto da = a.dense();
  const auto db = b.dense();
  return da < db;
}

Cochain::Cochain(ComplexPtr complex, int dim) : complex_(std::move(complex)), dim_(dim) {
  if (!complex_) throw DomainError("cochain without complex");
  if (dim_ < 0 || dim_ > complex_->top_dim()) throw DomainError("cochain dimension outside complex range");
}

Scalar Cochain::operator[](std::size_t cell) const {
  auto it = values_.find(cell);
  return it == values_.end() ? Scalar(0) : it->second;
}

void Cochain::set(std::size_t cell, Scalar v) {
  if (cell >= complex_->cell_count(dim_)) throw DomainError("cochain cell index out of range");
  if (v.is_zero() && v.exact())
    values_.erase(cell);
  else
    values_[cell] = std::move(v);
}

Scalar pair(const Cochain& phi, const Chain& c) {
  if (phi.complex() != c.complex()) throw DomainError("pairing across different complexes");
  if (phi.dim() != c.dim())
    throw DomainError("pairing a " + std::to_string(phi.dim()) + "-cochain with a " +
                      std::to_string(c.dim()) + "-chain");
  Scalar sum;
  for (const auto& [i, v] : c.terms()) sum += Scalar(v) * phi[i];
  return sum;
}

Report validate(const CellComplex& cx) {
  Report report;
  const int n = cx.top_dim();
  for (int d = 0; d <= n; ++d) {
    for (std::size_t i = 0; i < cx.cell_count(d); ++i) {
      const Cell& c = cx.cell(d, i);
      if (c.measure.is_zero())
        report.push_back({Issue::Severity::warning, "zero-measure",
                          std::to_string(d) + "-cell '" + c.id + "' has measure 0"});
      for (const Incidence& f : cx.faces(d, i))
        if (f.coefficient < -1 || f.coefficient > 1)
          report.push_back({Issue::Severity::warning, "non-regular-incidence",
                            std::to_string(d) + "-cell '" + c.id + "' has incidence " +
                                std::to_string(f.coefficient) + " on '" + cx.cell(d - 1, f.cell).id + "'"});
    }
  }
  for (int d = 2; d <= n; ++d) {
    for (std::size_t i = 0; i < cx.cell_count(d); ++i) {
      std::map<std::size_t, std::int64_t> acc;
      for (const Incidence& f : cx.faces(d, i))
        for (const Incidence& g : cx.faces(d - 1, f.cell)) acc[g.cell] += f.coefficient * g.coefficient;
      for (const auto& [v, coeff] : acc)
        if (coeff != 0)
          report.push_back({Issue::Severity::error, "boundary-squared",
                            "boundary of boundary of " + std::to_string(d) + "-cell '" + cx.cell(d, i).id +
                                "' has coefficient " + std::to_string(coeff) + " on '" +
                                cx.cell(d - 2, v).id + "'"});
    }
  }
  return report;
}

}  // namespace pplateau
