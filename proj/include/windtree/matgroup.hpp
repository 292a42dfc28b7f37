#pragma once

// Exact SL(2,Z) / PSL(2,Z) arithmetic and words over the two-generator
// alphabet {A, A^-1, B, B^-1}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "windtree/errors.hpp"

namespace windtree {

using BigInt = boost::multiprecision::cpp_int;

// 2x2 integer matrix (a b; c d) with determinant 1.
//
// Equality is exact SL(2,Z) equality; use psl_equal() or compare
// normalized() forms for PSL(2,Z) semantics. The PSL canonical form makes
// the first nonzero entry in the order (c, d, a, b) positive.
template <class Int>
class Matrix2 {
 public:
  Matrix2() : a_(1), b_(0), c_(0), d_(1) {}

  Matrix2(Int a, Int b, Int c, Int d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1) {
      throw InvalidArgument("matrix determinant is not 1");
    }
  }

  static Matrix2 identity() { return Matrix2(); }

  // Skips the determinant check; the caller guarantees ad - bc = 1.
  static Matrix2 unchecked(Int a, Int b, Int c, Int d) {
    return Matrix2(kUnchecked, std::move(a), std::move(b), std::move(c), std::move(d));
  }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  Matrix2 operator*(const Matrix2& o) const {
    return Matrix2(kUnchecked, a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                   c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
  }

  Matrix2 inverse() const { return Matrix2(kUnchecked, d_, -b_, -c_, a_); }
  Matrix2 transpose() const { return Matrix2(kUnchecked, a_, c_, b_, d_); }
  Matrix2 negated() const { return Matrix2(kUnchecked, -a_, -b_, -c_, -d_); }

  bool is_normalized() const {
    if (c_ != 0) return c_ > 0;
    if (d_ != 0) return d_ > 0;
    if (a_ != 0) return a_ > 0;
    return b_ > 0;
  }

  Matrix2 normalized() const { return is_normalized() ? *this : negated(); }

  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
  bool is_psl_identity() const {
    return b_ == 0 && c_ == 0 && ((a_ == 1 && d_ == 1) || (a_ == -1 && d_ == -1));
  }

  bool psl_equal(const Matrix2& o) const { return normalized() == o.normalized(); }

  Int trace() const { return a_ + d_; }
  Int norm2() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

  friend bool operator==(const Matrix2&, const Matrix2&) = default;

  // Lexicographic order on (a, b, c, d); used for canonical output ordering.
  friend bool operator<(const Matrix2& x, const Matrix2& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    if (x.b_ != y.b_) return x.b_ < y.b_;
    if (x.c_ != y.c_) return x.c_ < y.c_;
    return x.d_ < y.d_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix2& m) {
    return os << "(" << m.a_ << " " << m.b_ << "; " << m.c_ << " " << m.d_ << ")";
  }

 private:
  struct Unchecked {};
  static constexpr Unchecked kUnchecked{};
  Matrix2(Unchecked, Int a, Int b, Int c, Int d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  Int a_, b_, c_, d_;
};

using GroupElement = Matrix2<BigInt>;
using SmallMatrix = Matrix2<std::int64_t>;

GroupElement widen(const SmallMatrix& m);
// Throws InvalidArgument if an entry does not fit in 64 bits.
SmallMatrix narrow(const GroupElement& g);

struct SmallMatrixHash {
  std::size_t operator()(const SmallMatrix& m) const noexcept;
};

// Named elements. u = (1 1; 0 1), tu = transpose of u, r = (0 1; -1 0).
GroupElement u_power(long k);
GroupElement tu_power(long k);
GroupElement rotation_r();

// ---------------------------------------------------------------------------
// Words

enum class Letter : std::uint8_t { A = 0, AInv = 1, B = 2, BInv = 3 };

inline constexpr std::array<Letter, 4> kLetters = {Letter::A, Letter::AInv, Letter::B,
                                                   Letter::BInv};

constexpr Letter inverse(Letter x) {
  return static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 1U);
}
constexpr bool is_positive(Letter x) { return x == Letter::A || x == Letter::B; }
constexpr std::size_t index(Letter x) { return static_cast<std::size_t>(x); }

char to_char(Letter x);

// A word is a sequence of letters. Text form: 'A','B' for generators and
// 'a','b' for their inverses, e.g. "AbAbAb" = (A B^-1)^3. Whitespace ignored.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  bool is_reduced() const;
  Word reduced() const;
  Word inverse() const;
  Word power(unsigned n) const;
  Word subword(std::size_t pos, std::size_t len) const;

  Word operator*(const Word& o) const;
  Word& push_back(Letter x) {
    letters_.push_back(x);
    return *this;
  }

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// Image of each letter; entry i is the image of letter i (A, A^-1, B, B^-1).
template <class Int>
class Alphabet {
 public:
  Alphabet(Matrix2<Int> a, Matrix2<Int> b)
      : images_{a, a.inverse(), b, b.inverse()} {}
  const Matrix2<Int>& operator[](Letter x) const { return images_[index(x)]; }

 private:
  std::array<Matrix2<Int>, 4> images_;
};

// A -> u^2, B -> tu^2: the free group Gamma0 = <u^2, tu^2>.
const Alphabet<BigInt>& gamma0_alphabet();
// A -> u, B -> tu^3: the group G = <u, tu^3>.
const Alphabet<BigInt>& g_alphabet();
const Alphabet<std::int64_t>& gamma0_alphabet_small();
const Alphabet<std::int64_t>& g_alphabet_small();

// Product of the letter images, in PSL canonical form. Free reduction is
// applied first; it does not change the value.
template <class Int>
Matrix2<Int> evaluate(const Word& w, const Alphabet<Int>& alphabet) {
  Matrix2<Int> g;
  const Word r = w.reduced();
  for (Letter x : r.letters()) g = g * alphabet[x];
  return g.normalized();
}

// Unique freely reduced Gamma0-word for g, found by norm descent: peel off
// the leading letter whose removal strictly lowers a^2+b^2+c^2+d^2.
// Throws NotInGamma0.
Word sanov_decompose(const GroupElement& g);

}  // namespace windtree
