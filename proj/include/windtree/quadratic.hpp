#pragma once

// Exact arithmetic in Q(sqrt D) and the Veech criterion for wind-tree
// parameters (a, b).

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace windtree {

using Rational = boost::multiprecision::cpp_rational;

bool is_square_free(std::int64_t n);

// x + y sqrt(D), D square-free and positive. Canonical: y == 0 iff D == 1.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational x, Rational y = 0, std::int64_t D = 1);  // throws NonCanonical

  // Grammar: "p/q", "p/q + r/s*sqrt(D)", "p/q - sqrt(D)", integers allowed
  // in place of fractions. Throws ParseError / NonCanonical.
  static QuadraticNumber parse(std::string_view text);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  std::int64_t D() const { return D_; }
  bool is_rational() const { return y_ == 0; }

  // Exact sign of the real number.
  int sign() const;
  double to_double() const;

  // Throws InvalidArgument when the operands live in different fields.
  QuadraticNumber operator+(const QuadraticNumber& o) const;
  QuadraticNumber operator-(const QuadraticNumber& o) const;
  QuadraticNumber operator*(const QuadraticNumber& o) const;
  QuadraticNumber operator-() const;
  QuadraticNumber reciprocal() const;  // throws OutOfDomain on zero

  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;

  std::string to_string() const;

 private:
  std::int64_t common_field(const QuadraticNumber& o) const;

  Rational x_ = 0;
  Rational y_ = 0;
  std::int64_t D_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& q);

// Pi(a, b) is Veech iff a, b are rational, or 1/(1-a) = x + y sqrt D and
// 1/(1-b) = (1-x) + y sqrt D for rationals x, y and a square-free D > 1.
// Throws OutOfRange unless 0 < a, b < 1.
bool calta_mcmullen_is_veech(const QuadraticNumber& a, const QuadraticNumber& b);

}  // namespace windtree
