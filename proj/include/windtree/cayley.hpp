#pragma once

// Balls in the Cayley graph of G = <u, v> with v = tu^3 and S = {u, v, u^-1, v^-1},
// geodesic suffix sets, and brute-force checks of the cone-type theory.
//
// Letters follow matgroup: A = u, a = u^-1, B = v, b = v^-1.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "windtree/gg_bound.hpp"
#include "windtree/matgroup.hpp"

namespace windtree {

// Bit masks over letters (bit index(x)) and over ordered letter pairs
// (bit 4 * index(first) + index(second)).
using LetterMask = std::uint8_t;
using PairMask = std::uint16_t;

constexpr LetterMask letter_bit(Letter x) { return static_cast<LetterMask>(1U << index(x)); }
constexpr PairMask pair_bit(Letter first, Letter second) {
  return static_cast<PairMask>(1U << (4 * index(first) + index(second)));
}

struct BallEntry {
  SmallMatrix element;   // PSL-normalized
  int word_norm = 0;
  LetterMask suffix1 = 0;  // last letters of geodesic words
  PairMask suffix2 = 0;    // last two letters of geodesic words
  int cone_type = -1;      // -1 when the suffix set is unclassifiable

  std::vector<Letter> suffix1_letters() const;
  // S_2(g) when nonempty, S_1(g) otherwise, as sorted words.
  std::vector<Word> suffix2star() const;
};

class CayleyBall {
 public:
  int radius() const { return radius_; }
  const std::vector<BallEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Entries with word_norm == n occupy [layer_begin(n), layer_begin(n + 1)).
  std::size_t layer_begin(int n) const { return layer_offsets_.at(static_cast<std::size_t>(n)); }

  const BallEntry* find(const SmallMatrix& g) const;

  void write_csv(std::ostream& os) const;

 private:
  friend CayleyBall build_ball(int radius);
  int radius_ = 0;
  std::vector<BallEntry> entries_;
  std::vector<std::size_t> layer_offsets_;
  std::unordered_map<SmallMatrix, std::size_t, SmallMatrixHash> index_;
};

// Breadth-first ball of the given radius (0..16). Layers are sorted by
// matrix entries, so the output is independent of hash iteration order.
CayleyBall build_ball(int radius);

// Cone type 0..3 from the level-2 suffix set. Throws UnclassifiableSuffixSet.
int cone_type(LetterMask suffix1, PairMask suffix2);
int cone_type(const BallEntry& e);

struct ConeTypeReport {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;
  // Automaton read off the ball: observed successor multisets and
  // predecessor counts per type.
  std::optional<TypeAutomaton> automaton;
};

// Checks every element of norm <= radius - 1 against the successor table
// 0 -> {1,1,1,1}, 1 -> {1,1,2}, 2 -> {1,1,3}, 3 -> {1,1}, and #S+ + #S- = 4.
ConeTypeReport verify_cone_types(int radius);
ConeTypeReport verify_cone_types(const CayleyBall& ball);

// (u v^-1)^3, (u^-1 v)^3, (v u^-1)^3, (v^-1 u)^3.
std::vector<Word> primitive_relators();

struct RelatorReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// Relators are trivial, their proper subwords are not, and no reduced word
// of length 1..max_short_length is trivial in G.
RelatorReport relators_check(int max_short_length = 5);

// First forbidden suffix combination realized by the suffix sets, if any.
std::optional<std::string> forbidden_suffix_violation(LetterMask suffix1, PairMask suffix2);

struct ForbiddenSuffixReport {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<std::string> violation;
};

ForbiddenSuffixReport forbidden_suffixes_check(int radius);

// Free-group ball size 1 + sum_{k=1..n} 4 * 3^(k-1).
std::uint64_t free_ball_size(int radius);

}  // namespace windtree
