#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "windtree/homology_rep.hpp"

using namespace windtree;
using HB = HomologyBasis;

namespace {

GroupElement M(long a, long b, long c, long d) { return GroupElement(a, b, c, d); }

Word random_reduced_word(std::mt19937& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<int> pick(0, 3);
  const std::size_t n = len(rng);
  std::vector<Letter> letters;
  while (letters.size() < n) {
    const Letter x = kLetters[static_cast<std::size_t>(pick(rng))];
    if (!letters.empty() && letters.back() == inverse(x)) continue;
    letters.push_back(x);
  }
  return Word(letters);
}

// All reduced words of length <= depth.
std::vector<Word> word_ball(int depth) {
  std::vector<Word> out{Word()};
  std::size_t begin = 0;
  for (int n = 1; n <= depth; ++n) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (Letter x : kLetters) {
        const Word& w = out[k];
        if (!w.empty() && w[w.length() - 1] == inverse(x)) continue;
        Word v = w;
        out.push_back(v.push_back(x));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace

TEST_CASE("sigma parsing") {
  CHECK(parse_sigma("pm") == Sigma::PlusMinus);
  CHECK(parse_sigma("+-") == Sigma::PlusMinus);
  CHECK(parse_sigma("mp") == Sigma::MinusPlus);
  CHECK(parse_sigma("-+") == Sigma::MinusPlus);
  CHECK_THROWS_AS(parse_sigma("pp"), ParseError);
  CHECK(to_string(Sigma::MinusPlus) == "-+");
}

TEST_CASE("u2_action on basis classes") {
  const auto h00 = HomologyClass::basis(HB::h00);
  const auto v00 = HomologyClass::basis(HB::v00);
  CHECK(u2_action(h00) == h00);
  CHECK(u2_action(v00) == v00 + h00 + HomologyClass::basis(HB::c0));
  CHECK(u2_action(HomologyClass::basis(HB::c1)) == HomologyClass::basis(HB::c1));
  const auto c_pm = HomologyClass::basis(HB::c0) * 2 - HomologyClass::basis(HB::c1) * 2;
  CHECK(u2_action(v_sigma(Sigma::PlusMinus)) ==
        v_sigma(Sigma::PlusMinus) + h_sigma(Sigma::PlusMinus) + c_pm);
  // linearity
  const auto x = v00 * 3 - HomologyClass::basis(HB::v11) + h00 * 5;
  const auto y = HomologyClass::basis(HB::v01) * -2 + HomologyClass::basis(HB::c1);
  CHECK(u2_action(x + y) == u2_action(x) + u2_action(y));
}

TEST_CASE("induced matrices reproduce u^3 and u") {
  CHECK(induced_u2_matrix(Sigma::PlusMinus) == M(1, 3, 0, 1));
  CHECK(induced_u2_matrix(Sigma::MinusPlus) == M(1, 1, 0, 1));
  CHECK(induced_u2_matrix(Sigma::PlusMinus) == evaluate(Word::parse("A"), rho_alphabet(Sigma::PlusMinus)));
  CHECK(induced_u2_matrix(Sigma::MinusPlus) == evaluate(Word::parse("A"), rho_alphabet(Sigma::MinusPlus)));
}

TEST_CASE("reading c_j by the second index does not give u^3 and u") {
  // Under v_ij -> v_ij + h_ij + c_j the c-part of u^2 v^sigma is
  // sum_ij sign_ij c_j. For +- the signs (1, 1, -1, -1) on slots 00, 01, 10, 11
  // cancel per j, so the matrix would be u rather than u^3. For -+ the signs
  // (1, -1, 1, -1) leave 2 c0 - 2 c1, which the rule c^{-+} = 0 cannot absorb.
  const std::array<int, 4> pm{1, 1, -1, -1}, mp{1, -1, 1, -1};
  auto c_part = [](const std::array<int, 4>& s) {
    return std::array<int, 2>{s[0] + s[2], s[1] + s[3]};
  };
  CHECK(c_part(pm) == std::array<int, 2>{0, 0});
  CHECK(c_part(mp) == std::array<int, 2>{2, -2});
  // while the first-index reading gives
  auto c_part_first = [](const std::array<int, 4>& s) {
    return std::array<int, 2>{s[0] + s[1], s[2] + s[3]};
  };
  CHECK(c_part_first(pm) == std::array<int, 2>{2, -2});
  CHECK(c_part_first(mp) == std::array<int, 2>{0, 0});
  const auto w = u2_action(v_sigma(Sigma::PlusMinus));
  CHECK(w[HB::c0] == 2);
  CHECK(w[HB::c1] == -2);
}

TEST_CASE("rho examples") {
  CHECK(rho(Sigma::MinusPlus, Word::parse("A")) == u_power(1));
  CHECK(rho(Sigma::MinusPlus, Word::parse("B")) == tu_power(3));
  CHECK(rho(Sigma::PlusMinus, Word::parse("A")) == u_power(3));
  CHECK(rho(Sigma::PlusMinus, Word::parse("B")) == tu_power(1));
  CHECK(rho(Sigma::MinusPlus, Word::parse("AbAbAb")).is_identity());
  CHECK(rho(Sigma::PlusMinus, Word()).is_identity());
  CHECK(rho(Sigma::PlusMinus, Word::parse("ABab")) == M(13, -9, 3, -2).normalized());
}

TEST_CASE("kernel and bad membership examples") {
  CHECK(in_kernel(Sigma::PlusMinus, Word()));
  CHECK(in_kernel(Sigma::MinusPlus, Word::parse("AbAbAb")));
  CHECK_FALSE(in_kernel(Sigma::PlusMinus, Word::parse("ABab")));
  CHECK(in_gamma_bad(Sigma::PlusMinus, Word::parse("A")));
  CHECK_FALSE(in_gamma_bad(Sigma::PlusMinus, Word::parse("B")));
  CHECK(in_gamma_bad(Sigma::MinusPlus, Word::parse("B")));
  CHECK_FALSE(in_gamma_bad(Sigma::MinusPlus, Word::parse("A")));
  CHECK(in_gamma_bad(Sigma::MinusPlus, Word::parse("AbAbAb")));
}

TEST_CASE("rho is a homomorphism on 1000 random pairs") {
  std::mt19937 rng(42);
  for (Sigma s : {Sigma::PlusMinus, Sigma::MinusPlus}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Word w1 = random_reduced_word(rng, 10), w2 = random_reduced_word(rng, 10);
      CHECK(rho(s, w1 * w2) == (rho(s, w1) * rho(s, w2)).normalized());
    }
  }
}

TEST_CASE("filters: kernel inside bad, closed under inverse and products") {
  const auto ball = word_ball(7);
  for (Sigma s : {Sigma::PlusMinus, Sigma::MinusPlus}) {
    std::vector<Word> kernel, bad;
    for (const Word& w : ball) {
      const bool k = in_kernel(s, w), b = in_gamma_bad(s, w);
      if (k) CHECK(b);
      if (k) kernel.push_back(w);
      if (b) bad.push_back(w);
      CHECK(in_kernel(s, w.inverse()) == k);
      CHECK(in_gamma_bad(s, w.inverse()) == b);
    }
    CHECK(kernel.size() > 1);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
      const Word& x = kernel[rng() % kernel.size()];
      const Word& y = kernel[rng() % kernel.size()];
      CHECK(in_kernel(s, x * y));
      const Word& p = bad[rng() % bad.size()];
      const Word& q = bad[rng() % bad.size()];
      CHECK(in_gamma_bad(s, p * q));
    }
  }
}

TEST_CASE("the two representations have transposed images") {
  std::set<GroupElement> pm, mp_t;
  for (const Word& w : word_ball(6)) {
    pm.insert(rho(Sigma::PlusMinus, w));
    mp_t.insert(rho(Sigma::MinusPlus, w).transpose().normalized());
  }
  CHECK(pm == mp_t);
}

TEST_CASE("no kernel word shorter than 6, and (A b)^3 is one") {
  for (Sigma s : {Sigma::PlusMinus, Sigma::MinusPlus}) {
    std::size_t length6 = 0;
    for (const Word& w : word_ball(6)) {
      if (w.empty() || !in_kernel(s, w)) continue;
      CHECK(w.length() == 6);
      ++length6;
    }
    CHECK(length6 > 0);
  }
  CHECK(in_kernel(Sigma::PlusMinus, Word::parse("aBaBaB")));
  CHECK(in_kernel(Sigma::MinusPlus, Word::parse("AbAbAb")));
}
