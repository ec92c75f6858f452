#include "pplateau/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pplateau {

namespace {

// Exact q-th root of a nonnegative integer, if it exists.
std::optional<Integer> exact_root(const Integer& n, unsigned q) {
  if (n < 2 || q == 1) return n;
  const double guess = std::pow(n.convert_to<double>(), 1.0 / q);
  if (!std::isfinite(guess)) return std::nullopt;
  const Integer base(static_cast<long long>(std::llround(guess)));
  for (int delta = -1; delta <= 1; ++delta) {
    const Integer r = base + delta;
    if (r < 0) continue;
    if (boost::multiprecision::pow(r, q) == n) return r;
  }
  return std::nullopt;
}

// θ^(p/q) when it is rational.
std::optional<Rational> exact_power(const Rational& theta, const Rational& alpha) {
  const Integer q = boost::multiprecision::denominator(alpha);
  const Integer p = boost::multiprecision::numerator(alpha);
  if (q > 64 || p > 64) return std::nullopt;
  const unsigned qu = q.convert_to<unsigned>();
  const unsigned pu = p.convert_to<unsigned>();
  auto rn = exact_root(boost::multiprecision::numerator(theta), qu);
  auto rd = exact_root(boost::multiprecision::denominator(theta), qu);
  if (!rn || !rd) return std::nullopt;
  return Rational(boost::multiprecision::pow(*rn, pu), boost::multiprecision::pow(*rd, pu));
}

}  // namespace

Integrand Integrand::identity() {
  Integrand h;
  h.kind_ = Kind::identity;
  return h;
}

Integrand Integrand::alpha(Rational exponent) {
  if (exponent < 0 || exponent > 1) throw DomainError("alpha exponent must lie in [0, 1]");
  Integrand h;
  h.kind_ = Kind::alpha;
  h.alpha_ = std::move(exponent);
  h.cache_validity();
  return h;
}

Integrand Integrand::table(std::vector<std::pair<Rational, Rational>> points) {
  if (points.size() < 2) throw DomainError("table integrand needs at least two points");
  if (points.front().first != 0) throw DomainError("table integrand must start at theta = 0");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i - 1].first < points[i].first))
      throw DomainError("table integrand abscissae must be strictly increasing");
  Integrand h;
  h.kind_ = Kind::table;
  h.alpha_ = 0;
  h.points_ = std::move(points);
  h.cache_validity();
  return h;
}

void Integrand::cache_validity() { valid_ = validate_integrand(*this).empty(); }

Rational Integrand::terminal_slope() const {
  if (kind_ != Kind::table) return 0;
  const auto& a = points_[points_.size() - 2];
  const auto& b = points_.back();
  return (b.second - a.second) / (b.first - a.first);
}

Scalar Integrand::operator()(const Scalar& theta) const {
  if (theta.sign() < 0) throw DomainError("integrand evaluated at a negative argument");
  switch (kind_) {
    case Kind::identity:
      return theta;
    case Kind::alpha: {
      if (theta.is_zero()) return Scalar(0);
      if (alpha_ == 0) return Scalar(1);
      if (alpha_ == 1) return theta;
      if (theta.exact())
        if (auto r = exact_power(theta.to_rational(), alpha_)) return Scalar(*r);
      return Scalar::inexact(std::pow(theta.to_double(), alpha_.convert_to<double>()));
    }
    case Kind::table: {
      // Segment [x0, x1] containing theta, or the last one for extrapolation.
      std::size_t seg = points_.size() - 2;
      if (theta.exact()) {
        const Rational t = theta.to_rational();
        for (std::size_t i = 0; i + 1 < points_.size(); ++i)
          if (t <= points_[i + 1].first) {
            seg = i;
            break;
          }
        const auto& [x0, y0] = points_[seg];
        const auto& [x1, y1] = points_[seg + 1];
        return Scalar(y0 + (y1 - y0) * (t - x0) / (x1 - x0));
      }
      const double t = theta.to_double();
      for (std::size_t i = 0; i + 1 < points_.size(); ++i)
        if (t <= points_[i + 1].first.convert_to<double>()) {
          seg = i;
          break;
        }
      const double x0 = points_[seg].first.convert_to<double>();
      const double y0 = points_[seg].second.convert_to<double>();
      const double x1 = points_[seg + 1].first.convert_to<double>();
      const double y1 = points_[seg + 1].second.convert_to<double>();
      return Scalar::inexact(y0 + (y1 - y0) * (t - x0) / (x1 - x0));
    }
  }
  return Scalar(0);
}

std::int64_t Integrand::upper_inverse(const Scalar& y) const {
  if (y.sign() < 0) return -1;
  constexpr std::int64_t kLimit = std::int64_t{1} << 40;
  std::int64_t lo = 0;  // H(lo) <= y
  std::int64_t hi = 1;
  while ((*this)(hi) <= y) {
    lo = hi;
    if (hi >= kLimit) throw DomainError("integrand bounded by " + y.str() + "; no finite inverse");
    hi *= 2;
  }
  // H(lo) <= y < H(hi)
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if ((*this)(mid) <= y)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::string Integrand::describe() const {
  switch (kind_) {
    case Kind::identity:
      return "identity";
    case Kind::alpha:
      return "alpha(" + to_string(alpha_) + ")";
    case Kind::table: {
      std::ostringstream os;
      os << "table(" << points_.size() << " points)";
      return os.str();
    }
  }
  return {};
}

std::vector<Scalar> default_grid() {
  std::vector<Scalar> g;
  for (int i = 0; i <= 64; ++i) g.emplace_back(i);
  return g;
}

Report validate_integrand(const Integrand& h, const std::vector<Scalar>& grid) {
  if (grid.empty()) throw DomainError("empty validation grid");
  for (const Scalar& t : grid)
    if (t.sign() < 0) throw DomainError("validation grid contains a negative value");

  Report report;
  auto fail = [&](std::string kind, std::string msg) {
    report.push_back({Issue::Severity::error, std::move(kind), std::move(msg)});
  };

  if (h(Scalar(0)) != Scalar(0)) fail("h-zero", "H(0) = " + h(Scalar(0)).str());
  if (h(Scalar(1)) != Scalar(1)) fail("h-one", "H(1) = " + h(Scalar(1)).str());

  std::vector<Scalar> points = grid;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i; j < grid.size(); ++j) points.push_back(grid[i] + grid[j]);
  std::sort(points.begin(), points.end(), [](const Scalar& a, const Scalar& b) {
    return a.to_rational() < b.to_rational();
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Scalar& a, const Scalar& b) { return a.identical(b); }),
               points.end());

  std::vector<Scalar> values;
  values.reserve(points.size());
  for (const Scalar& t : points) values.push_back(h(t));

  std::size_t monotone_failures = 0;
  std::string first_monotone;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(values[i - 1] < values[i])) {
      if (monotone_failures++ == 0)
        first_monotone = "H(" + points[i - 1].str() + ") = " + values[i - 1].str() + " is not below H(" +
                         points[i].str() + ") = " + values[i].str();
    }
  }
  if (monotone_failures)
    fail("strictly-increasing", first_monotone + " (" + std::to_string(monotone_failures) + " violations)");

  std::size_t sub_failures = 0;
  std::string first_sub;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i; j < grid.size(); ++j) {
      const Scalar lhs = h(grid[i] + grid[j]);
      const Scalar rhs = h(grid[i]) + h(grid[j]);
      if (lhs > rhs && sub_failures++ == 0)
        first_sub = "H(" + (grid[i] + grid[j]).str() + ") = " + lhs.str() + " > H(" + grid[i].str() +
                    ") + H(" + grid[j].str() + ") = " + rhs.str();
    }
  if (sub_failures) fail("subadditive", first_sub + " (" + std::to_string(sub_failures) + " violations)");

  switch (h.kind()) {
    case Integrand::Kind::identity:
      break;
    case Integrand::Kind::alpha:
      if (h.exponent() == 0) fail("unbounded", "theta^0 is bounded by 1");
      break;
    case Integrand::Kind::table:
      if (h.terminal_slope() <= 0)
        fail("unbounded", "terminal slope " + to_string(h.terminal_slope()) + " is not positive");
      break;
  }
  return report;
}

namespace {

template <class Coeff>
Scalar mass_impl(const BasicChain<Coeff>& c) {
  Scalar sum;
  for (const auto& [i, v] : c.terms()) {
    const Coeff a = v < 0 ? Coeff(-v) : v;
    sum += Scalar(Rational(a)) * c.complex()->cell(c.dim(), i).measure;
  }
  return sum;
}

Scalar h_mass_unchecked(const Chain& c, const Integrand& h) {
  Scalar sum;
  for (const auto& [i, v] : c.terms())
    sum += h(Scalar(v < 0 ? -v : v)) * c.complex()->cell(c.dim(), i).measure;
  return sum;
}

}  // namespace

Scalar mass(const Chain& c) { return mass_impl(c); }
Scalar mass(const RationalChain& c) { return mass_impl(c); }

Scalar h_mass(const Chain& c, const Integrand& h) {
  if (!h.valid()) throw DomainError("integrand " + h.describe() + " violates the concave-integrand axioms");
  return h_mass_unchecked(c, h);
}

Scalar alpha_mass(const Chain& c, const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw DomainError("alpha must lie in [0, 1]");
  return h_mass_unchecked(c, Integrand::alpha(alpha));
}

EnergyValue energy(const Chain& t, const Cochain& phi, const Integrand& h) {
  if (t.dim() < 1) throw DomainError("energy needs a chain of dimension >= 1");
  if (phi.dim() != t.dim() - 1)
    throw DomainError("energy: cochain dimension " + std::to_string(phi.dim()) + " does not match chain dimension " +
                      std::to_string(t.dim()) + " - 1");
  EnergyValue e;
  e.h_mass = h_mass(t, h);
  e.pairing = pair(phi, boundary(t));
  e.energy = e.h_mass - e.pairing;
  return e;
}

Scalar comass(const Cochain& phi) {
  Scalar best;
  for (const auto& [i, v] : phi.values()) {
    const Cell& cell = phi.complex()->cell(phi.dim(), i);
    if (cell.measure.is_zero()) {
      if (v.is_zero()) continue;
      throw DomainError("comass: zero-measure cell '" + cell.id + "' carries value " + v.str());
    }
    best = max(best, abs(v) / cell.measure);
  }
  return best;
}

}  // namespace pplateau
