#ifndef PPLATEAU_SUNFLOWER_HPP
#define PPLATEAU_SUNFLOWER_HPP

#include "pplateau/complex.hpp"
#include "pplateau/functionals.hpp"
#include "pplateau/solver.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pplateau {

/**
 * Parameters of the sunflower: a disk D ringed by k petals P_i. Petal i is
 * bounded by inner-circle edge e_i (shared with D) and outer arc o_i. All
 * 2-cells are oriented so that ∂D = Σ e_i and ∂P_i = o_i - e_i. The prescribed
 * boundary carries density 2 on the inner circle, with the orientation of the
 * petals (coefficient -2 on every e_i), and density 1 on each arc that is not
 * dropped.
 */
struct SunflowerSpec {
  int petals = 8;
  std::vector<Scalar> petal_phi;  // ∂P_i(Φ)
  Scalar disk_pairing;            // ∂D(Φ)
  Scalar disk_area{1};
  std::vector<Scalar> petal_areas;     // default 1 each
  std::optional<Scalar> inner_length;  // whole inner circle; default 2π
  std::vector<Scalar> arc_lengths;     // default π/2 times the inner edge length
  std::set<int> dropped_arcs;          // 0-based petals whose arc is absent from B
};

struct SunflowerScenario {
  ComplexPtr complex;
  Chain b;
  Cochain phi;
  std::size_t disk = 0;
  std::vector<std::size_t> petal_cells;
  std::vector<std::size_t> inner_edges;
  std::vector<std::size_t> arcs;
  std::vector<Scalar> petal_phi;
  Scalar disk_pairing;
  std::set<int> dropped_arcs;

  int petals() const { return static_cast<int>(petal_cells.size()); }
  bool partial() const { return !dropped_arcs.empty(); }
  bool arc_present(int i) const { return dropped_arcs.count(i) == 0; }
  Scalar disk_area() const { return complex->cell(2, disk).measure; }
  Scalar petal_area(int i) const { return complex->cell(2, petal_cells[i]).measure; }

  /// a·D + Σ c_i·P_i.
  Chain candidate(std::int64_t a, const std::vector<std::int64_t>& c) const;
  /// Partial Plateau instance with T0 = 0.
  Problem problem(const Integrand& h = Integrand::identity()) const;
};

SunflowerScenario build_sunflower(const SunflowerSpec& spec);

/// 0-based petal indices by the exact sign of M(P_i) - ∂P_i(Φ).
struct PetalClasses {
  std::vector<int> negatives;
  std::vector<int> neutrals;
  std::vector<int> positives;
};

PetalClasses classify_petals(const SunflowerScenario& s);

struct Thresholds {
  Scalar lambda_m2;  // -M(D) + Σ_{P-} (M(P_i) - ∂P_i(Φ))
  Scalar lambda_m1;  // -M(D)
  Scalar lambda_0;   //  M(D) + Σ_{P+} (M(P_i) - ∂P_i(Φ))
};

/// Petals whose arc was dropped are forced to coefficient 0 and left out of
/// the sums.
Thresholds thresholds(const SunflowerScenario& s);

struct ClosedForm {
  Solution solution;
  /// Disk coefficients a whose family is optimal, ascending.
  std::vector<int> regimes;
  Thresholds lambdas;
  PetalClasses classes;
};

/// Full minimizer family from the threshold regimes (identity integrand only).
ClosedForm closed_form_solutions(const SunflowerScenario& s, const Integrand& h = Integrand::identity(),
                                 std::size_t max_minimizers = 64);

/// Static SVG of the sunflower: orientations, B densities, petal classes, and
/// when given the first minimizer's coefficients and the regime.
std::string render_sunflower_svg(const SunflowerScenario& s, const ClosedForm* solved = nullptr);

}  // namespace pplateau

#endif
