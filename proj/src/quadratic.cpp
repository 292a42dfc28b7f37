#include "windtree/quadratic.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "windtree/errors.hpp"

namespace windtree {

bool is_square_free(std::int64_t n) {
  if (n <= 0) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

QuadraticNumber::QuadraticNumber(Rational x, Rational y, std::int64_t D)
    : x_(std::move(x)), y_(std::move(y)), D_(D) {
  if (!is_square_free(D_)) {
    throw NonCanonical("D = " + std::to_string(D_) + " is not a square-free positive integer");
  }
  if (D_ == 1) {
    x_ += y_;
    y_ = 0;
  }
  if (y_ == 0) D_ = 1;
}

int QuadraticNumber::sign() const {
  const int sx = x_.sign();
  const int sy = y_.sign();
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // opposite signs: compare x^2 with y^2 D
  const Rational lhs = x_ * x_;
  const Rational rhs = y_ * y_ * D_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sx : sy;
}

double QuadraticNumber::to_double() const {
  return x_.convert_to<double>() + y_.convert_to<double>() * std::sqrt(static_cast<double>(D_));
}

std::int64_t QuadraticNumber::common_field(const QuadraticNumber& o) const {
  if (D_ == 1) return o.D_;
  if (o.D_ == 1 || o.D_ == D_) return D_;
  throw InvalidArgument("operands lie in different quadratic fields");
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
  return QuadraticNumber(x_ + o.x_, y_ + o.y_, common_field(o));
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const { return *this + (-o); }

QuadraticNumber QuadraticNumber::operator-() const { return QuadraticNumber(-x_, -y_, D_); }

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
  const std::int64_t D = common_field(o);
  return QuadraticNumber(x_ * o.x_ + y_ * o.y_ * D, x_ * o.y_ + y_ * o.x_, D);
}

QuadraticNumber QuadraticNumber::reciprocal() const {
  const Rational norm = x_ * x_ - y_ * y_ * D_;
  if (norm == 0) throw OutOfDomain("reciprocal of zero");
  return QuadraticNumber(x_ / norm, -y_ / norm, D_);
}

std::string QuadraticNumber::to_string() const {
  std::ostringstream os;
  os << x_;
  if (y_ != 0) os << (y_ > 0 ? " + " : " - ") << abs(y_) << "*sqrt(" << D_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& q) { return os << q.to_string(); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  QuadraticNumber parse() {
    skip_space();
    Rational x = 0, y = 0;
    std::int64_t D = 1;
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, radicand] = term();
      if (radicand == 0) {
        x += sign * coeff;
      } else {
        if (D != 1 && radicand != D) fail("mixed square roots");
        D = radicand;
        y += sign * coeff;
      }
      skip_space();
    }
    if (first) fail("empty expression");
    return QuadraticNumber(x, y, D);
  }

 private:
  // coefficient and radicand (0 for a rational term)
  std::pair<Rational, std::int64_t> term() {
    if (at_sqrt()) return {Rational(1), sqrt_call()};
    Rational coeff = integer();
    skip_space();
    if (!done() && peek() == '/') {
      take();
      skip_space();
      const Rational den = integer();
      if (den == 0) fail("zero denominator");
      coeff /= den;
      skip_space();
    }
    if (!done() && peek() == '*') {
      take();
      skip_space();
      if (!at_sqrt()) fail("expected sqrt(D) after '*'");
      return {coeff, sqrt_call()};
    }
    return {coeff, 0};
  }

  bool at_sqrt() const { return text_.substr(pos_, 4) == "sqrt"; }

  std::int64_t sqrt_call() {
    pos_ += 4;
    skip_space();
    if (done() || take() != '(') fail("expected '(' after sqrt");
    skip_space();
    const Rational r = integer();
    skip_space();
    if (done() || take() != ')') fail("expected ')'");
    if (r <= 0) fail("sqrt argument must be positive");
    return static_cast<std::int64_t>(numerator(r));
  }

  Rational integer() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 18) fail("integer too long");
    return Rational(std::stoll(std::string(text_.substr(start, pos_ - start))));
  }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at position " +
                     std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void require_unit_interval(const QuadraticNumber& q, const char* name) {
  if (q.sign() <= 0 || (QuadraticNumber(1) - q).sign() <= 0) {
    throw OutOfRange(std::string(name) + " = " + q.to_string() + " is not in (0, 1)");
  }
}

}  // namespace

QuadraticNumber QuadraticNumber::parse(std::string_view text) { return Parser(text).parse(); }

bool calta_mcmullen_is_veech(const QuadraticNumber& a, const QuadraticNumber& b) {
  require_unit_interval(a, "a");
  require_unit_interval(b, "b");
  if (a.is_rational() && b.is_rational()) return true;
  // One rational parameter forces y = 0, and then both would be rational.
  if (a.is_rational() != b.is_rational()) return false;
  if (a.D() != b.D()) return false;
  const QuadraticNumber one(1);
  const QuadraticNumber p = (one - a).reciprocal();
  const QuadraticNumber q = (one - b).reciprocal();
  return p.y() == q.y() && p.x() + q.x() == 1;
}

}  // namespace windtree
