#ifndef PPLATEAU_SLICER_HPP
#define PPLATEAU_SLICER_HPP

#include "pplateau/functionals.hpp"
#include "pplateau/polyhedral.hpp"

#include <cstdint>
#include <vector>

namespace pplateau {

/// Raised when the level set meets a simplex on its relative boundary.
class DegenerateSlice : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Orthogonal projection p: R^n -> R^m (rows orthonormal) and a level y in R^m.
struct SliceParams {
  std::vector<std::vector<double>> projection;
  std::vector<double> level;
};

struct SlicePoint {
  std::vector<double> x;
  std::int64_t weight = 0;
};

/// Finite integer combination of points.
struct ZeroCurrent {
  int ambient_dim = 0;
  std::vector<SlicePoint> points;

  double mass() const;
  double h_mass(const Integrand& h) const;
};

/// Slice of an m-chain by p^{-1}(y), with m = T.dim(). Coincident points are
/// merged. Throws DegenerateSlice if y is on the image of a simplex boundary.
ZeroCurrent slice(const PolyhedralChain& t, const SliceParams& params);

/// Counter-based generator: the stream for (seed, stream, sample, attempt)
/// does not depend on evaluation order.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t sample, std::uint64_t attempt);
  std::uint64_t next();
  double uniform();  // [0, 1)
  double normal();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Haar-distributed m x n matrix with orthonormal rows.
std::vector<std::vector<double>> random_projection(int m, int n, CounterRng& rng);

/// Unit m-cube at the origin of R^n as a positively oriented chain.
PolyhedralChain unit_cube(int ambient_dim, int dim);

struct McOptions {
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct McEstimate {
  double estimate = 0;
  double standard_error = 0;
  double raw_mean = 0;      // uncalibrated average of slice integrals
  double calibration = 0;   // same average for the unit cube
  double calibration_error = 0;
  std::size_t samples = 0;
  std::size_t resampled = 0;  // degenerate slices redrawn
};

/// Estimates M_H(T) as the ratio of the averaged H-mass of slices of T to
/// the same average for a unit cube. Results are identical for any worker
/// count.
McEstimate mc_h_mass(const PolyhedralChain& t, const Integrand& h, const McOptions& options = {});

}  // namespace pplateau

#endif
