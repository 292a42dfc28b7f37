#include "windtree/cayley.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace windtree {

namespace {

constexpr int kMaxRadius = 16;

// Successor type multisets of the cone-type theorem, indexed by type.
const std::array<std::vector<int>, 4> kSuccessorTable = {
    std::vector<int>{1, 1, 1, 1}, std::vector<int>{1, 1, 2}, std::vector<int>{1, 1, 3},
    std::vector<int>{1, 1}};

constexpr bool same_generator(Letter x, Letter y) { return (index(x) >> 1) == (index(y) >> 1); }

// Key of a level-2 starred suffix set: (is level 2, mask).
using StarKey = std::pair<bool, PairMask>;

std::map<StarKey, int> make_type_table() {
  std::map<StarKey, int> table;
  table[{false, 0}] = 0;
  for (Letter s : kLetters) {
    table[{false, letter_bit(s)}] = 1;
    table[{true, pair_bit(s, s)}] = 1;
    for (Letter r : kLetters) {
      if (same_generator(s, r)) continue;
      // s r with equal signs is the shape "b a", mixed signs is "b^-1 a".
      table[{true, pair_bit(s, r)}] = is_positive(s) == is_positive(r) ? 1 : 2;
    }
  }
  // {a, b} in {{u, v}, {u^-1, v^-1}}, both orders.
  const std::array<std::pair<Letter, Letter>, 4> pairs = {
      std::pair{Letter::A, Letter::B}, std::pair{Letter::B, Letter::A},
      std::pair{Letter::AInv, Letter::BInv}, std::pair{Letter::BInv, Letter::AInv}};
  for (auto [a, b] : pairs) {
    table[{true, static_cast<PairMask>(pair_bit(inverse(a), b) | pair_bit(inverse(b), a))}] = 3;
    table[{true, static_cast<PairMask>(pair_bit(a, a) | pair_bit(b, a))}] = 1;
  }
  return table;
}

const std::map<StarKey, int>& type_table() {
  static const std::map<StarKey, int> table = make_type_table();
  return table;
}

std::string describe(LetterMask suffix1, PairMask suffix2) {
  BallEntry e;
  e.suffix1 = suffix1;
  e.suffix2 = suffix2;
  std::string out = "{";
  bool first = true;
  for (const Word& w : e.suffix2star()) {
    out += (first ? "" : ", ") + w.to_string();
    first = false;
  }
  return out + "}";
}

std::string describe(const BallEntry& e) {
  std::ostringstream os;
  os << "element " << e.element << " (|g| = " << e.word_norm
     << ", S2* = " << describe(e.suffix1, e.suffix2) << ")";
  return os.str();
}

}  // namespace

std::vector<Letter> BallEntry::suffix1_letters() const {
  std::vector<Letter> out;
  for (Letter x : kLetters) {
    if (suffix1 & letter_bit(x)) out.push_back(x);
  }
  return out;
}

std::vector<Word> BallEntry::suffix2star() const {
  std::vector<Word> out;
  if (suffix2 != 0) {
    for (Letter x : kLetters) {
      for (Letter y : kLetters) {
        if (suffix2 & pair_bit(x, y)) out.push_back(Word({x, y}));
      }
    }
  } else {
    for (Letter x : suffix1_letters()) out.push_back(Word({x}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

const BallEntry* CayleyBall::find(const SmallMatrix& g) const {
  auto it = index_.find(g.normalized());
  return it == index_.end() ? nullptr : &entries_[it->second];
}

void CayleyBall::write_csv(std::ostream& os) const {
  os << "a,b,c,d,word_norm,cone_type\n";
  for (const BallEntry& e : entries_) {
    os << e.element.a() << ',' << e.element.b() << ',' << e.element.c() << ',' << e.element.d()
       << ',' << e.word_norm << ',' << e.cone_type << '\n';
  }
}

int cone_type(LetterMask suffix1, PairMask suffix2) {
  const StarKey key = suffix2 != 0 ? StarKey{true, suffix2} : StarKey{false, suffix1};
  const auto& table = type_table();
  auto it = table.find(key);
  if (it == table.end()) {
    throw UnclassifiableSuffixSet("suffix set " + describe(suffix1, suffix2) +
                                  " matches no cone type");
  }
  return it->second;
}

int cone_type(const BallEntry& e) { return cone_type(e.suffix1, e.suffix2); }

CayleyBall build_ball(int radius) {
  if (radius < 0 || radius > kMaxRadius) {
    throw InvalidArgument("ball radius must lie in [0, 16]");
  }
  const auto& gens = g_alphabet_small();
  CayleyBall ball;
  ball.radius_ = radius;
  ball.entries_.push_back(BallEntry{SmallMatrix::identity(), 0, 0, 0, 0});
  ball.index_.emplace(SmallMatrix::identity(), 0);
  ball.layer_offsets_ = {0, 1};

  for (int n = 0; n < radius; ++n) {
    std::unordered_map<SmallMatrix, std::pair<LetterMask, PairMask>, SmallMatrixHash> next;
    const std::size_t begin = ball.layer_offsets_[static_cast<std::size_t>(n)];
    const std::size_t end = ball.layer_offsets_[static_cast<std::size_t>(n) + 1];
    for (std::size_t k = begin; k < end; ++k) {
      const BallEntry& g = ball.entries_[k];
      for (Letter s : kLetters) {
        SmallMatrix h = (g.element * gens[s]).normalized();
        if (ball.index_.contains(h)) continue;
        auto& [s1, s2] = next[h];
        s1 |= letter_bit(s);
        for (Letter t : kLetters) {
          if (g.suffix1 & letter_bit(t)) s2 |= pair_bit(t, s);
        }
      }
    }
    std::vector<std::pair<SmallMatrix, std::pair<LetterMask, PairMask>>> layer(next.begin(),
                                                                               next.end());
    std::sort(layer.begin(), layer.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [h, masks] : layer) {
      BallEntry e{h, n + 1, masks.first, masks.second, -1};
      try {
        e.cone_type = cone_type(e);
      } catch (const UnclassifiableSuffixSet&) {
        e.cone_type = -1;
      }
      ball.index_.emplace(h, ball.entries_.size());
      ball.entries_.push_back(e);
    }
    ball.layer_offsets_.push_back(ball.entries_.size());
  }
  return ball;
}

ConeTypeReport verify_cone_types(int radius) { return verify_cone_types(build_ball(radius)); }

ConeTypeReport verify_cone_types(const CayleyBall& ball) {
  ConeTypeReport report;
  const auto& gens = g_alphabet_small();
  std::map<int, AutomatonType> observed;
  auto fail = [&report](std::string message) {
    if (report.pass) report.counterexample = std::move(message);
    report.pass = false;
  };

  const std::size_t end = ball.layer_begin(ball.radius());
  for (std::size_t k = 0; k < end && report.pass; ++k) {
    const BallEntry& g = ball.entries()[k];
    ++report.checked;
    if (g.cone_type < 0) {
      fail("unclassifiable " + describe(g));
      break;
    }
    std::vector<int> successor_types;
    int predecessors = 0;
    for (Letter s : kLetters) {
      const BallEntry* h = ball.find(g.element * gens[s]);
      if (h == nullptr) {
        fail("neighbour outside the ball of " + describe(g));
        break;
      }
      if (h->word_norm == g.word_norm + 1) {
        successor_types.push_back(h->cone_type);
      } else if (h->word_norm == g.word_norm - 1) {
        ++predecessors;
      } else {
        fail("edge inside a sphere at " + describe(g));
        break;
      }
    }
    if (!report.pass) break;
    if (successor_types.size() + static_cast<std::size_t>(predecessors) != 4) {
      fail("#S+ + #S- != 4 at " + describe(g));
      break;
    }
    std::sort(successor_types.begin(), successor_types.end());
    if (successor_types != kSuccessorTable[static_cast<std::size_t>(g.cone_type)]) {
      std::ostringstream msg;
      msg << "type " << g.cone_type << " " << describe(g) << " has successor types {";
      for (std::size_t i = 0; i < successor_types.size(); ++i) {
        msg << (i ? "," : "") << successor_types[i];
      }
      msg << "}";
      fail(msg.str());
      break;
    }
    observed.try_emplace(g.cone_type, AutomatonType{successor_types, predecessors});
  }

  if (report.pass && observed.size() == kSuccessorTable.size()) {
    std::vector<AutomatonType> types;
    for (auto& [type, data] : observed) types.push_back(data);
    report.automaton = TypeAutomaton(4, 0, std::move(types));
  }
  return report;
}

std::vector<Word> primitive_relators() {
  return {Word::parse("Ab").power(3), Word::parse("aB").power(3), Word::parse("Ba").power(3),
          Word::parse("bA").power(3)};
}

namespace {

void short_relator_search(const Word& prefix, const SmallMatrix& value, int max_length,
                          std::vector<std::string>& failures) {
  if (!prefix.empty() && value.is_psl_identity()) {
    failures.push_back("reduced word " + prefix.to_string() + " is trivial in G");
  }
  if (static_cast<int>(prefix.length()) == max_length) return;
  const auto& gens = g_alphabet_small();
  for (Letter x : kLetters) {
    if (!prefix.empty() && prefix.letters().back() == inverse(x)) continue;
    Word next = prefix;
    next.push_back(x);
    short_relator_search(next, value * gens[x], max_length, failures);
  }
}

}  // namespace

RelatorReport relators_check(int max_short_length) {
  RelatorReport report;
  const auto& gens = g_alphabet();
  for (const Word& r : primitive_relators()) {
    if (!evaluate(r, gens).is_psl_identity()) {
      report.failures.push_back("relator " + r.to_string() + " is not trivial");
    }
    for (std::size_t len = 1; len < r.length(); ++len) {
      for (std::size_t pos = 0; pos + len <= r.length(); ++pos) {
        const Word sub = r.subword(pos, len);
        if (evaluate(sub, gens).is_psl_identity()) {
          report.failures.push_back("proper subword " + sub.to_string() + " of " +
                                    r.to_string() + " is trivial");
        }
      }
    }
  }
  short_relator_search(Word(), SmallMatrix::identity(), max_short_length, report.failures);
  report.pass = report.failures.empty();
  return report;
}

std::optional<std::string> forbidden_suffix_violation(LetterMask suffix1, PairMask suffix2) {
  auto in1 = [suffix1](Letter x) { return (suffix1 & letter_bit(x)) != 0; };
  auto in2 = [suffix2](Letter x, Letter y) { return (suffix2 & pair_bit(x, y)) != 0; };
  auto name = [](std::initializer_list<Letter> xs) { return Word(std::vector<Letter>(xs)).to_string(); };

  for (Letter s : kLetters) {
    const Letter sb = inverse(s);
    if (in1(s) && in1(sb)) return "s, s^-1: " + name({s}) + ", " + name({sb});
    for (Letter r : kLetters) {
      if (same_generator(s, r)) continue;
      if (in2(s, r) && in2(sb, r)) return "sr, s^-1 r: " + name({s, r}) + ", " + name({sb, r});
      if (in1(s) && in2(r, r)) return "s, r^2: " + name({s}) + ", " + name({r, r});
      if (in2(s, r) && in1(s)) return "sr, s: " + name({s, r}) + ", " + name({s});
    }
  }
  if (in1(Letter::A) && in1(Letter::BInv)) return std::string("u, v^-1");
  if (in1(Letter::AInv) && in1(Letter::B)) return std::string("u^-1, v");
  return std::nullopt;
}

ForbiddenSuffixReport forbidden_suffixes_check(int radius) {
  ForbiddenSuffixReport report;
  const CayleyBall ball = build_ball(radius);
  for (const BallEntry& e : ball.entries()) {
    ++report.checked;
    if (auto v = forbidden_suffix_violation(e.suffix1, e.suffix2)) {
      report.pass = false;
      report.violation = *v + " at " + describe(e);
      break;
    }
  }
  return report;
}

std::uint64_t free_ball_size(int radius) {
  std::uint64_t total = 1;
  std::uint64_t sphere = 4;
  for (int k = 1; k <= radius; ++k) {
    total += sphere;
    sphere *= 3;
  }
  return total;
}

}  // namespace windtree
