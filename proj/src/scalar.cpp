#include "pplateau/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace pplateau {

namespace {

bool integer_sqrt(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

// cpp_int's string constructor reads a leading 0 as octal.
Integer decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Integer(0);
  return Integer(std::string(digits.substr(first)));
}

std::optional<Integer> parse_integer(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return std::nullopt;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
  Integer v = decimal_integer(s.substr(i));
  return s[0] == '-' ? Integer(-v) : v;
}

}  // namespace

Scalar Scalar::inexact(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite scalar value");
  Scalar s;
  s.exact_ = false;
  s.d_ = v;
  return s;
}

Rational Scalar::to_rational() const {
  if (exact_) return q_;
  return Rational(d_);
}

double Scalar::to_double() const {
  return exact_ ? q_.convert_to<double>() : d_;
}

int Scalar::sign() const {
  if (exact_) return q_.sign();
  return (d_ > 0) - (d_ < 0);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (exact_)
    r.q_ = -q_;
  else
    r.d_ = -d_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (exact_ && o.exact_) {
    q_ += o.q_;
  } else {
    d_ = to_double() + o.to_double();
    exact_ = false;
    q_ = 0;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (exact_ && o.exact_) {
    q_ *= o.q_;
  } else {
    d_ = to_double() * o.to_double();
    exact_ = false;
    q_ = 0;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (exact_ && o.exact_) {
    q_ /= o.q_;
  } else {
    d_ = to_double() / o.to_double();
    exact_ = false;
    q_ = 0;
  }
  return *this;
}

int compare(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) return a.q_ < b.q_ ? -1 : (b.q_ < a.q_ ? 1 : 0);
  const double x = a.to_double();
  const double y = b.to_double();
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  if (std::abs(x - y) <= kTolerance * scale) return 0;
  return x < y ? -1 : 1;
}

bool Scalar::identical(const Scalar& o) const {
  if (exact_ != o.exact_) return false;
  return exact_ ? q_ == o.q_ : d_ == o.d_;
}

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string Scalar::str() const {
  if (exact_) return to_string(q_);
  char buf[64];
  std::snprintf(buf, sizeof buf, "~%.17g", d_);
  return buf;
}

std::optional<Scalar> Scalar::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text[0] == '~') {
    std::string body(text.substr(1));
    char* end = nullptr;
    const double v = std::strtod(body.c_str(), &end);
    if (body.empty() || end != body.c_str() + body.size() || !std::isfinite(v))
      return std::nullopt;
    return Scalar::inexact(v);
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Scalar(Rational(*num, *den));
  }
  // Decimal: [sign] digits [. digits] [e [sign] digits], read exactly.
  std::string_view mant = text;
  long long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    auto ex = parse_integer(text.substr(e + 1));
    if (!ex || abs(*ex) > 4000) return std::nullopt;
    exponent = ex->convert_to<long long>();
    mant = text.substr(0, e);
  }
  std::string digits;
  bool negative = false;
  std::size_t i = 0;
  if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
    negative = mant[0] == '-';
    i = 1;
  }
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < mant.size(); ++i) {
    const char c = mant[i];
    if (c == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  Rational value{decimal_integer(digits)};
  Integer ten_pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::llabs(exponent)));
  if (exponent >= 0)
    value *= ten_pow;
  else
    value /= ten_pow;
  if (negative) value = -value;
  return Scalar(value);
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }
Scalar min(const Scalar& a, const Scalar& b) { return compare(b, a) < 0 ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return compare(b, a) > 0 ? b : a; }

Scalar sqrt(const Scalar& s) {
  if (s.sign() < 0) throw DomainError("square root of a negative value");
  if (s.exact()) {
    const Rational q = s.to_rational();
    Integer rn, rd;
    if (integer_sqrt(boost::multiprecision::numerator(q), rn) &&
        integer_sqrt(boost::multiprecision::denominator(q), rd))
      return Scalar(Rational(rn, rd));
  }
  return Scalar::inexact(std::sqrt(s.to_double()));
}

}  // namespace pplateau
