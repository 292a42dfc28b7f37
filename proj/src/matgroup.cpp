#include "windtree/matgroup.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace windtree {

GroupElement widen(const SmallMatrix& m) {
  return GroupElement(m.a(), m.b(), m.c(), m.d());
}

SmallMatrix narrow(const GroupElement& g) {
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  for (const BigInt* x : {&g.a(), &g.b(), &g.c(), &g.d()}) {
    if (*x < lo || *x > hi) throw InvalidArgument("matrix entry exceeds 64 bits");
  }
  return SmallMatrix(static_cast<std::int64_t>(g.a()), static_cast<std::int64_t>(g.b()),
                     static_cast<std::int64_t>(g.c()), static_cast<std::int64_t>(g.d()));
}

std::size_t SmallMatrixHash::operator()(const SmallMatrix& m) const noexcept {
  // splitmix-style mixing of the four entries
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::int64_t x : {m.a(), m.b(), m.c(), m.d()}) {
    std::uint64_t z = h ^ static_cast<std::uint64_t>(x);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

GroupElement u_power(long k) { return GroupElement(1, k, 0, 1); }
GroupElement tu_power(long k) { return GroupElement(1, 0, k, 1); }
GroupElement rotation_r() { return GroupElement(0, 1, -1, 0); }

char to_char(Letter x) {
  switch (x) {
    case Letter::A: return 'A';
    case Letter::AInv: return 'a';
    case Letter::B: return 'B';
    case Letter::BInv: return 'b';
  }
  return '?';
}

Word Word::parse(std::string_view text) {
  Word w;
  for (char ch : text) {
    switch (ch) {
      case 'A': w.letters_.push_back(Letter::A); break;
      case 'a': w.letters_.push_back(Letter::AInv); break;
      case 'B': w.letters_.push_back(Letter::B); break;
      case 'b': w.letters_.push_back(Letter::BInv); break;
      default:
        if (!std::isspace(static_cast<unsigned char>(ch))) {
          throw ParseError(std::string("unexpected character in word: '") + ch + "'");
        }
    }
  }
  return w;
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == windtree::inverse(letters_[i - 1])) return false;
  }
  return true;
}

Word Word::reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (Letter x : letters_) {
    if (!out.empty() && out.back() == windtree::inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return Word(std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& x : out) x = windtree::inverse(x);
  return Word(std::move(out));
}

Word Word::power(unsigned n) const {
  Word w;
  for (unsigned i = 0; i < n; ++i) w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.end());
  return w;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::operator*(const Word& o) const {
  Word w = *this;
  w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
  return w;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) s.push_back(to_char(x));
  return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << '"' << w.to_string() << '"';
}

const Alphabet<BigInt>& gamma0_alphabet() {
  static const Alphabet<BigInt> alphabet(u_power(2), tu_power(2));
  return alphabet;
}

const Alphabet<BigInt>& g_alphabet() {
  static const Alphabet<BigInt> alphabet(u_power(1), tu_power(3));
  return alphabet;
}

const Alphabet<std::int64_t>& gamma0_alphabet_small() {
  static const Alphabet<std::int64_t> alphabet(SmallMatrix(1, 2, 0, 1), SmallMatrix(1, 0, 2, 1));
  return alphabet;
}

const Alphabet<std::int64_t>& g_alphabet_small() {
  static const Alphabet<std::int64_t> alphabet(SmallMatrix(1, 1, 0, 1), SmallMatrix(1, 0, 3, 1));
  return alphabet;
}

namespace {

bool is_odd(const BigInt& x) { return bit_test(x, 0); }

}  // namespace

Word sanov_decompose(const GroupElement& input) {
  GroupElement g = input.normalized();
  if (!is_odd(g.a()) || is_odd(g.b()) || is_odd(g.c()) || !is_odd(g.d())) {
    std::ostringstream msg;
    msg << g << " is not congruent to the identity mod 2";
    throw NotInGamma0(msg.str());
  }
  const auto& alphabet = gamma0_alphabet();
  std::vector<Letter> letters;
  while (!g.is_identity()) {
    const BigInt current = g.norm2();
    BigInt best_norm = current;
    GroupElement best;
    Letter best_letter = Letter::A;
    for (Letter x : kLetters) {
      GroupElement h = alphabet[inverse(x)] * g;
      BigInt n = h.norm2();
      if (n < best_norm) {
        best_norm = std::move(n);
        best = std::move(h);
        best_letter = x;
      }
    }
    if (best_norm == current) {
      std::ostringstream msg;
      msg << input << " admits no norm-decreasing letter at " << g;
      throw NotInGamma0(msg.str());
    }
    letters.push_back(best_letter);
    g = best.normalized();
  }
  return Word(std::move(letters));
}

}  // namespace windtree
