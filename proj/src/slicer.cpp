#include "pplateau/slicer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <thread>

namespace pplateau {

namespace {

constexpr double kBarycentricEps = 1e-12;
constexpr double kOrthoEps = 1e-12;
constexpr int kMaxAttempts = 64;

struct PreparedSimplex {
  std::vector<Eigen::VectorXd> vertices;
  std::int64_t multiplicity;
};

struct Prepared {
  int n = 0;
  int d = 0;
  std::vector<PreparedSimplex> simplices;
};

Prepared prepare(const PolyhedralChain& t) {
  Prepared p;
  p.n = t.ambient_dim();
  p.d = t.dim();
  const PolyhedralChain k = canonical(t);
  for (const Simplex& s : k.simplices()) {
    PreparedSimplex ps{{}, s.multiplicity};
    for (const Point& v : s.vertices) {
      Eigen::VectorXd x(p.n);
      for (int k = 0; k < p.n; ++k) x[k] = v[k].convert_to<double>();
      ps.vertices.push_back(std::move(x));
    }
    p.simplices.push_back(std::move(ps));
  }
  return p;
}

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct RawSlice {
  std::vector<SlicePoint> points;
  bool degenerate = false;
};

// Points of p^{-1}(y) on each simplex; weight is multiplicity times the sign
// of p restricted to the simplex.
RawSlice slice_prepared(const Prepared& t, const Eigen::MatrixXd& p, const Eigen::VectorXd& y) {
  RawSlice out;
  const int m = t.d;
  for (const PreparedSimplex& s : t.simplices) {
    Eigen::MatrixXd e(t.n, m);
    for (int i = 0; i < m; ++i) e.col(i) = s.vertices[i + 1] - s.vertices[0];
    const Eigen::MatrixXd pe = p * e;
    const double det = pe.determinant();
    double scale = 1;
    for (int i = 0; i < m; ++i) scale *= std::max(pe.col(i).norm(), 1e-300);
    if (std::abs(det) <= 1e-12 * scale) continue;  // projection collapses the simplex
    const Eigen::VectorXd lambda = pe.partialPivLu().solve(y - p * s.vertices[0]);
    const double rest = 1.0 - lambda.sum();
    const double lo = std::min(lambda.minCoeff(), rest);
    if (lo < -kBarycentricEps) continue;
    if (lo <= kBarycentricEps) {
      out.degenerate = true;
      return out;
    }
    const Eigen::VectorXd x = s.vertices[0] + e * lambda;
    out.points.push_back({std::vector<double>(x.data(), x.data() + x.size()), det > 0 ? s.multiplicity : -s.multiplicity});
  }
  return out;
}

std::vector<SlicePoint> merge(std::vector<SlicePoint> pts) {
  std::vector<SlicePoint> out;
  for (SlicePoint& q : pts) {
    bool merged = false;
    for (SlicePoint& o : out) {
      double d2 = 0, s2 = 1;
      for (std::size_t k = 0; k < q.x.size(); ++k) {
        d2 += (q.x[k] - o.x[k]) * (q.x[k] - o.x[k]);
        s2 = std::max(s2, std::abs(o.x[k]));
      }
      if (std::sqrt(d2) <= 1e-9 * s2) {
        o.weight += q.weight;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(q));
  }
  std::erase_if(out, [](const SlicePoint& q) { return q.weight == 0; });
  return out;
}

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows, int n) {
  Eigen::MatrixXd p(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw DomainError("projection row has the wrong length");
    for (int k = 0; k < n; ++k) p(static_cast<Eigen::Index>(i), k) = rows[i][k];
  }
  return p;
}

// Memoised H(|w|) for integer weights.
class HCache {
 public:
  explicit HCache(const Integrand& h) : h_(h) {
    for (std::int64_t w = 0; w < 64; ++w) small_.push_back(h_(w).to_double());
  }
  double operator()(std::int64_t w) const {
    w = std::llabs(w);
    return w < 64 ? small_[static_cast<std::size_t>(w)] : h_(w).to_double();
  }

 private:
  const Integrand& h_;
  std::vector<double> small_;
};

struct Sampler {
  const Prepared& t;
  const HCache& h;
  std::uint64_t seed;
  std::uint64_t stream;

  // One slice integral sample: |box| * M_H(slice) with a random projection
  // and a uniform level in the bounding box of the projected support.
  double operator()(std::size_t sample, std::size_t& resampled) const {
    const int m = t.d;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      CounterRng rng(seed, stream, sample, static_cast<std::uint64_t>(attempt));
      const Eigen::MatrixXd p = to_matrix(random_projection(m, t.n, rng), t.n);
      Eigen::VectorXd lo = Eigen::VectorXd::Constant(m, INFINITY), hi = Eigen::VectorXd::Constant(m, -INFINITY);
      for (const PreparedSimplex& s : t.simplices)
        for (const Eigen::VectorXd& v : s.vertices) {
          const Eigen::VectorXd q = p * v;
          lo = lo.cwiseMin(q);
          hi = hi.cwiseMax(q);
        }
      Eigen::VectorXd y(m);
      double box = 1;
      for (int i = 0; i < m; ++i) {
        y[i] = lo[i] + (hi[i] - lo[i]) * rng.uniform();
        box *= hi[i] - lo[i];
      }
      RawSlice raw = slice_prepared(t, p, y);
      if (raw.degenerate) {
        ++resampled;
        continue;
      }
      double value = 0;
      for (const SlicePoint& q : merge(std::move(raw.points))) value += h(q.weight);
      return box * value;
    }
    throw DomainError("could not draw a non-degenerate slice");
  }
};

struct Moments {
  double mean = 0;
  double variance = 0;
  std::size_t resampled = 0;
};

Moments run(const Prepared& t, const HCache& h, std::uint64_t seed, std::uint64_t stream, std::size_t samples,
            unsigned workers) {
  std::vector<double> values(samples, 0.0);
  std::vector<std::size_t> resampled(std::max(1u, workers), 0);
  Sampler sampler{t, h, seed, stream};
  if (!t.simplices.empty()) {
    const unsigned w = std::max(1u, workers);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(w);
    for (unsigned k = 0; k < w; ++k)
      pool.emplace_back([&, k] {
        try {
          for (std::size_t i = k; i < samples; i += w) values[i] = sampler(i, resampled[k]);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  Moments out;
  double sum = 0;
  for (double v : values) sum += v;
  out.mean = samples ? sum / static_cast<double>(samples) : 0;
  double ss = 0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.variance = samples > 1 ? ss / static_cast<double>(samples - 1) : 0;
  for (std::size_t r : resampled) out.resampled += r;
  return out;
}

}  // namespace

double ZeroCurrent::mass() const {
  double s = 0;
  for (const SlicePoint& p : points) s += static_cast<double>(std::llabs(p.weight));
  return s;
}

double ZeroCurrent::h_mass(const Integrand& h) const {
  double s = 0;
  for (const SlicePoint& p : points) s += h(std::llabs(p.weight)).to_double();
  return s;
}

ZeroCurrent slice(const PolyhedralChain& t, const SliceParams& params) {
  const int n = t.ambient_dim();
  const int m = t.dim();
  if (m < 0) throw DomainError("cannot slice a chain of dimension -1");
  if (static_cast<int>(params.projection.size()) != m) throw DomainError("projection must have one row per chain dimension");
  if (static_cast<int>(params.level.size()) != m) throw DomainError("level has the wrong dimension");
  const Eigen::MatrixXd p = to_matrix(params.projection, n);
  if (m > 0 && ((p * p.transpose()) - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() > kOrthoEps)
    throw DomainError("projection rows are not orthonormal");
  const Prepared prep = prepare(t);
  const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(params.level.data(), m);
  RawSlice raw = slice_prepared(prep, p, y);
  if (raw.degenerate) throw DegenerateSlice("level meets the boundary of a simplex");
  return {n, merge(std::move(raw.points))};
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t sample, std::uint64_t attempt)
    : key_(splitmix(splitmix(splitmix(splitmix(seed) ^ stream) ^ sample) ^ attempt)) {}

std::uint64_t CounterRng::next() { return splitmix(key_ + 0x632be59bd9b4e019ULL * ++counter_); }

double CounterRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double CounterRng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<std::vector<double>> random_projection(int m, int n, CounterRng& rng) {
  if (m < 0 || m > n) throw DomainError("projection rank out of range");
  std::vector<Eigen::VectorXd> rows;
  while (static_cast<int>(rows.size()) < m) {
    Eigen::VectorXd g(n);
    for (int k = 0; k < n; ++k) g[k] = rng.normal();
    for (const auto& r : rows) g -= r.dot(g) * r;
    for (const auto& r : rows) g -= r.dot(g) * r;  // second pass for stability
    const double norm = g.norm();
    if (norm < 1e-8) continue;
    rows.push_back(g / norm);
  }
  std::vector<std::vector<double>> out;
  for (const auto& r : rows) out.emplace_back(r.data(), r.data() + n);
  return out;
}

PolyhedralChain unit_cube(int ambient_dim, int dim) {
  if (dim < 0 || dim > ambient_dim) throw DomainError("cube dimension out of range");
  PolyhedralChain out(ambient_dim, dim);
  std::vector<int> perm(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) perm[i] = i;
  do {
    std::vector<Point> vs{Point(ambient_dim, Rational(0))};
    for (int axis : perm) {
      Point next = vs.back();
      next[axis] += 1;
      vs.push_back(std::move(next));
    }
    int inversions = 0;
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) inversions += perm[i] > perm[j];
    out.add(std::move(vs), inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

McEstimate mc_h_mass(const PolyhedralChain& t, const Integrand& h, const McOptions& options) {
  if (!h.valid()) throw DomainError("integrand " + h.describe() + " violates the concave-integrand axioms");
  if (t.dim() < 0) throw DomainError("cannot estimate the mass of a chain of dimension -1");
  if (options.samples < 2) throw DomainError("need at least two samples");
  McEstimate out;
  out.samples = options.samples;
  const Prepared prep = prepare(t);
  if (t.dim() == 0) {
    out.estimate = out.raw_mean = h_mass(t, h);
    out.calibration = 1;
    return out;
  }
  const HCache cache(h);
  const Integrand identity = Integrand::identity();
  const HCache unit(identity);
  const Prepared cube = prepare(unit_cube(t.ambient_dim(), t.dim()));
  const Moments a = run(prep, cache, options.seed, 0, options.samples, options.workers);
  const Moments c = run(cube, unit, options.seed, 1, options.samples, options.workers);
  const double n = static_cast<double>(options.samples);
  out.raw_mean = a.mean;
  out.calibration = c.mean;
  out.calibration_error = std::sqrt(c.variance / n);
  out.resampled = a.resampled + c.resampled;
  if (prep.simplices.empty()) return out;
  out.estimate = a.mean / c.mean;
  // Delta method for the ratio of independent means.
  out.standard_error = std::sqrt(a.variance / n / (c.mean * c.mean) +
                                 a.mean * a.mean * c.variance / n / std::pow(c.mean, 4));
  return out;
}

}  // namespace pplateau
