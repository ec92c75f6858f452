#ifndef PPLATEAU_FUNCTIONALS_HPP
#define PPLATEAU_FUNCTIONALS_HPP

#include "pplateau/complex.hpp"
#include "pplateau/report.hpp"
#include "pplateau/scalar.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pplateau {

/**
 * Concave integrand H : [0, inf) -> [0, inf).
 *
 * Three representations: the identity (mass), theta^alpha for alpha in [0, 1]
 * (alpha-mass), and a piecewise-linear table through (theta, H(theta)) points
 * starting at theta = 0, extended past the last point with the last slope.
 *
 * Construction only rejects malformed data. Whether the five integrand axioms
 * hold is a separate question answered by validate_integrand(); valid() caches
 * the answer on the default grid.
 */
class Integrand {
 public:
  enum class Kind { identity, alpha, table };

  static Integrand identity();
  static Integrand alpha(Rational exponent);
  static Integrand table(std::vector<std::pair<Rational, Rational>> points);

  Kind kind() const { return kind_; }
  const Rational& exponent() const { return alpha_; }
  const std::vector<std::pair<Rational, Rational>>& points() const { return points_; }

  Scalar operator()(const Scalar& theta) const;
  Scalar operator()(std::int64_t theta) const { return (*this)(Scalar(theta)); }

  /// Largest integer t >= 0 with H(t) <= y; -1 when y < 0. Throws when H is
  /// bounded by y (no largest t exists).
  std::int64_t upper_inverse(const Scalar& y) const;

  /// Slope used beyond the last table point (0 for non-table kinds).
  Rational terminal_slope() const;

  bool valid() const { return valid_; }

  std::string describe() const;

  friend bool operator==(const Integrand& a, const Integrand& b) {
    return a.kind_ == b.kind_ && a.alpha_ == b.alpha_ && a.points_ == b.points_;
  }

 private:
  Integrand() = default;
  void cache_validity();

  Kind kind_ = Kind::identity;
  Rational alpha_{1};
  std::vector<std::pair<Rational, Rational>> points_;
  bool valid_ = true;
};

/// Integers 0..64.
std::vector<Scalar> default_grid();

/**
 * Checks H(0) = 0, H(1) = 1, strict monotonicity and subadditivity on the
 * grid together with all pairwise sums of grid points, and unboundedness from
 * the representation.
 */
Report validate_integrand(const Integrand& h, const std::vector<Scalar>& grid = default_grid());

struct EnergyValue {
  Scalar h_mass;
  Scalar pairing;
  Scalar energy;  // h_mass - pairing
};

/// Σ |c(σ)|·μ(σ).
Scalar mass(const Chain& c);
Scalar mass(const RationalChain& c);
/// Σ H(|c(σ)|)·μ(σ); throws DomainError for an invalid integrand.
Scalar h_mass(const Chain& c, const Integrand& h);
/// Σ |c(σ)|^α·μ(σ), α in [0, 1]; α = 0 gives the size, α = 1 the mass.
Scalar alpha_mass(const Chain& c, const Rational& alpha);

/// H-mass of T minus ∂T(φ).
EnergyValue energy(const Chain& t, const Cochain& phi, const Integrand& h);

/// max over cells of |φ(σ)| / μ(σ).
Scalar comass(const Cochain& phi);

}  // namespace pplateau

#endif
