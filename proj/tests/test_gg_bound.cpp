#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "windtree/errors.hpp"
#include "windtree/gg_bound.hpp"

using namespace windtree;
using doctest::Approx;

namespace {

// Minimax point of the built-in automaton from an independent constrained
// solver (minimize t subject to f_k(c) <= t).
constexpr double kOracleC[3] = {0.56801574, 0.6387189, 0.83359956};
constexpr double kOracleValue = 3.535264982;

TypeAutomaton one_type() { return TypeAutomaton(2, -1, {{{0}, 1}}); }

}  // namespace

TEST_CASE("automaton validation") {
  CHECK_NOTHROW(TypeAutomaton::builtin());
  // degree mismatch
  CHECK_THROWS_AS(TypeAutomaton(4, 0, {{{1, 1, 1, 1}, 0}, {{1, 1}, 1}}), InvalidArgument);
  // successor index out of range
  CHECK_THROWS_AS(TypeAutomaton(2, -1, {{{3}, 1}}), InvalidArgument);
  // root with predecessors
  CHECK_THROWS_AS(TypeAutomaton(2, 0, {{{0}, 1}}), InvalidArgument);
  CHECK(TypeAutomaton::builtin().valued_types() == std::vector<int>{1, 2, 3});
}

TEST_CASE("f_values examples") {
  const TypeAutomaton aut = TypeAutomaton::builtin();
  const auto f1 = f_values(aut, Valuation({1, 1, 1}));
  CHECK(f1 == std::vector<double>{4, 4, 4, 4});
  const auto fc = f_values(aut, Valuation({0.5680, 0.6387, 0.8336}));
  CHECK(fc[0] == Approx(2.272));
  CHECK(fc[1] == Approx(3.5353).epsilon(2e-5));
  CHECK(fc[2] == Approx(3.5353).epsilon(2e-5));
  CHECK(fc[3] == Approx(3.5353).epsilon(2e-5));
  // explicit formulas, with two predecessors for type 3
  const double c1 = 0.7, c2 = 1.3, c3 = 0.4;
  const auto f = f_values(aut, Valuation({c1, c2, c3}));
  CHECK(f[0] == Approx(4 * c1));
  CHECK(f[1] == Approx(2 * c1 + c2 + 1 / c1));
  CHECK(f[2] == Approx(2 * c1 + c3 + 1 / c2));
  CHECK(f[3] == Approx(2 * c1 + 2 / c3));
  CHECK(f_values(one_type(), Valuation({1})) == std::vector<double>{2});
}

TEST_CASE("valuations must be positive") {
  CHECK_THROWS_AS(Valuation({1, 0, 1}), NonPositiveValuation);
  CHECK_THROWS_AS(Valuation({1, -2, 1}), NonPositiveValuation);
  CHECK_THROWS_AS(f_values(TypeAutomaton::builtin(), Valuation({1, 1})), InvalidArgument);
}

TEST_CASE("gg_lower_bound examples") {
  const TypeAutomaton aut = TypeAutomaton::builtin();
  CHECK(gg_lower_bound(aut, Valuation({1, 1, 1})) == Approx(0.0));
  CHECK(gg_lower_bound(aut, Valuation({0.5680, 0.6387, 0.8336})) == Approx(0.4647).epsilon(1e-4));
  CHECK(gg_lower_bound(one_type(), Valuation({1})) == Approx(0.0));
}

TEST_CASE("optimize on the built-in automaton") {
  const TypeAutomaton aut = TypeAutomaton::builtin();
  const GgOptimum opt = optimize(aut, 1e-6);
  CHECK_FALSE(opt.diverged);
  CHECK(opt.value == Approx(kOracleValue).epsilon(1e-7));
  for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(opt.c[k] - kOracleC[k]) < 1e-4);
  CHECK(opt.bound == gg_lower_bound(aut, opt.c));
  CHECK(opt.bound > 0.4647);
  CHECK(opt.bound < upper_bound(4));
}

TEST_CASE("optimize is locally optimal under 1% perturbations") {
  const TypeAutomaton aut = TypeAutomaton::builtin();
  const GgOptimum opt = optimize(aut, 1e-10);
  for (int s1 = -1; s1 <= 1; ++s1) {
    for (int s2 = -1; s2 <= 1; ++s2) {
      for (int s3 = -1; s3 <= 1; ++s3) {
        const Valuation c({opt.c[0] * (1 + 0.01 * s1), opt.c[1] * (1 + 0.01 * s2),
                           opt.c[2] * (1 + 0.01 * s3)});
        CHECK(gg_lower_bound(aut, c) <= opt.bound + 1e-12);
      }
    }
  }
}

TEST_CASE("optimize is deterministic") {
  const GgOptimum a = optimize(TypeAutomaton::builtin(), 1e-8);
  const GgOptimum b = optimize(TypeAutomaton::builtin(), 1e-8);
  CHECK(a.c.values() == b.c.values());
  CHECK(a.value == b.value);
}

TEST_CASE("regular trees") {
  for (int k : {3, 4, 5, 6}) {
    const GgOptimum opt = optimize(TypeAutomaton::regular_tree(k), 1e-8);
    CHECK(opt.c[0] == Approx(1 / std::sqrt(k - 1.0)).epsilon(1e-4));
    CHECK(opt.value == Approx(2 * std::sqrt(k - 1.0)).epsilon(1e-8));
    CHECK(opt.bound == Approx(upper_bound(k)).epsilon(1e-7));
  }
  CHECK(upper_bound(4) == Approx(0.5359).epsilon(1e-4));
  CHECK(upper_bound(2) == 0.0);
  CHECK(upper_bound(5) == Approx(1.0));
  CHECK_THROWS_AS(upper_bound(1), InvalidArgument);
}

TEST_CASE("JSON round trip") {
  const TypeAutomaton aut = TypeAutomaton::builtin();
  const nlohmann::json j = aut.to_json();
  CHECK(j["generator_count"] == 4);
  CHECK(j["root"] == 0);
  CHECK(j["types"].size() == 4);
  CHECK(j["types"][3]["predecessors"] == 2);
  CHECK(TypeAutomaton::from_json(j) == aut);
  const auto parsed = nlohmann::json::parse(
      R"({"generator_count": 4, "root": 0, "types": [
          {"successors": [1,1,1,1], "predecessors": 0},
          {"successors": [2,1,1], "predecessors": 1},
          {"successors": [1,3,1], "predecessors": 1},
          {"successors": [1,1], "predecessors": 2}]})");
  CHECK(TypeAutomaton::from_json(parsed) == aut);
  CHECK_THROWS_AS(TypeAutomaton::from_json(nlohmann::json::parse(R"({"root": 0})")), ParseError);
}
