#ifndef PPLATEAU_SCALAR_HPP
#define PPLATEAU_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pplateau {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Relative tolerance used whenever a comparison involves a floating value.
inline constexpr double kTolerance = 1e-9;

/// Thrown when an input violates a mathematical precondition (dimension
/// mismatch, invalid integrand, degenerate slice, infeasible problem).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed input text; the message names the source and line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A real number that stays an exact rational as long as every operand was
 * exact, and degrades to a double otherwise. Comparisons between exact values
 * are exact; any comparison touching an inexact value uses kTolerance relative
 * to max(1, |a|, |b|).
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(v) {}
  Scalar(std::int64_t v) : q_(v) {}
  Scalar(Rational q) : q_(std::move(q)) {}

  static Scalar inexact(double v);

  bool exact() const { return exact_; }
  /// Exact value; for inexact scalars the exact binary value of the double.
  Rational to_rational() const;
  double to_double() const;

  bool is_zero() const { return exact_ ? q_ == 0 : d_ == 0.0; }
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// -1, 0, +1; tolerance applies when either side is inexact.
  friend int compare(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return compare(a, b) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

  /// Bitwise identity: same exactness and same stored value.
  bool identical(const Scalar& o) const;

  /// "p", "p/q" for exact values, "~<17 significant digits>" otherwise.
  std::string str() const;

  /// Accepts integers, "p/q", and decimals with optional exponent (all read
  /// exactly), or "~<double>" for an explicitly floating value.
  static std::optional<Scalar> parse(std::string_view text);

 private:
  bool exact_ = true;
  Rational q_{0};
  double d_ = 0.0;
};

Scalar abs(const Scalar& s);
Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);
Scalar sqrt(const Scalar& s);

/// Rational formatted as "p" or "p/q".
std::string to_string(const Rational& q);

}  // namespace pplateau

#endif
