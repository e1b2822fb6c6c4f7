#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace trifree::exact {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Square-free part s and cofactor f with value = f^2 * s. value >= 0.
struct SquareFreeSplit {
  BigInt cofactor;
  BigInt radicand;
};
SquareFreeSplit split_square(const BigInt& value);

/// Exact integer square root when value is a perfect square.
bool is_perfect_square(const BigInt& value, BigInt* root = nullptr);

/// A number r + s * sqrt(d) with rational r, s and square-free d >= 2.
/// d == 1 marks a plain rational (s is then kept at 0).
class QuadSurd {
public:
  QuadSurd() = default;
  QuadSurd(std::int64_t value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  QuadSurd(Rational value) : rational_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  QuadSurd(Rational rational, Rational surd, BigInt radicand);

  /// sqrt(value) for a non-negative integer value.
  static QuadSurd sqrt(const BigInt& value);

  const Rational& rational_part() const { return rational_; }
  const Rational& surd_part() const { return surd_; }
  const BigInt& radicand() const { return radicand_; }
  bool is_rational() const { return surd_ == 0; }
  /// Requires is_rational().
  const Rational& as_rational() const;

  int sign() const;
  double to_double() const;
  BigInt floor() const;

  QuadSurd operator-() const;
  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator/(const QuadSurd& x, const Rational& y);

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() == 0; }
  friend std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y) {
    return (x - y).sign() <=> 0;
  }

  /// "(P+Q√d)/R" style with the integer term first when non-negative, the
  /// surd term first otherwise: "(√5-1)/2", "(-√5-1)/2", "(3-√5)/10".
  /// Rationals print as "p/q" or "p".
  std::string to_string() const;

  /// Accepts the to_string() forms; "sqrt" may replace "√".
  static QuadSurd parse(std::string_view text);

private:
  void normalize();

  Rational rational_{0};
  Rational surd_{0};
  BigInt radicand_{1};
};

std::string to_string(const Rational& q);

}  // namespace trifree::exact
