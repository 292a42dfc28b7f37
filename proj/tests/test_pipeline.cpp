#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "windtree/errors.hpp"
#include "windtree/pipeline.hpp"

using namespace windtree;
using doctest::Approx;

TEST_CASE("rt_lambda0") {
  CHECK(rt_lambda0(0.25, 0.02575, 0.4647) == Approx(0.0114194436).epsilon(1e-8));
  CHECK(rt_lambda0(0.25, 0.02575, 0.4647) > 0.01141);
  CHECK(rt_lambda0(1, 1, 1) == Approx(0.5));
  CHECK(std::abs(rt_lambda0(0.25, 1e3, 1e3) - 0.25) < 1e-5);
  CHECK_THROWS_AS(rt_lambda0(0, 1, 1), NonPositiveInput);
  CHECK_THROWS_AS(rt_lambda0(1, -1, 1), NonPositiveInput);
  CHECK_THROWS_AS(rt_lambda0(1, 1, 0), NonPositiveInput);
}

TEST_CASE("rt_lambda0 is increasing in each argument") {
  const double grid[] = {0.05, 0.2, 0.5, 1.0, 3.0};
  for (double e : grid) {
    for (double E : grid) {
      for (double m : grid) {
        const double base = rt_lambda0(e, E, m);
        CHECK(rt_lambda0(e * 1.1, E, m) > base);
        CHECK(rt_lambda0(e, E * 1.1, m) > base);
        CHECK(rt_lambda0(e, E, m * 1.1) > base);
      }
    }
  }
}

TEST_CASE("delta_from_lambda0") {
  CHECK(delta_from_lambda0(0.011419) == Approx(0.988447).epsilon(1e-6));
  CHECK(delta_from_lambda0(0.011419) < 0.9885);
  CHECK(delta_from_lambda0(0.25) == 0.5);
  CHECK(delta_from_lambda0(0.24) == Approx(0.6).epsilon(1e-12));
  CHECK_THROWS_AS(delta_from_lambda0(0.0), OutOfDomain);
  CHECK_THROWS_AS(delta_from_lambda0(0.3), OutOfDomain);
  for (int k = 0; k < 100; ++k) {
    const double d = 0.5 + 0.4999 * k / 99.0;
    CHECK(std::abs(delta_from_lambda0(d * (1 - d)) - d) < 1e-7);
    const double l = delta_from_lambda0(0.001 + 0.249 * k / 99.0);
    CHECK(std::abs(l * (1 - l) - (0.001 + 0.249 * k / 99.0)) < 1e-12);
  }
}

TEST_CASE("pipeline with the published constants") {
  const BoundReport r = full_pipeline(PipelineConfig::published_constants());
  CHECK(r.lambda0 == Approx(0.0114194436).epsilon(1e-8));
  CHECK(r.delta == Approx(0.9884470866).epsilon(1e-9));
  CHECK(r.delta < 0.9885);
  CHECK(r.delta == (1 + std::sqrt(1 - 4 * r.lambda0)) / 2);
  CHECK(r.E.provenance == Provenance::PaperConstant);
}

TEST_CASE("default pipeline computes every ingredient") {
  const BoundReport r = full_pipeline(PipelineConfig());
  CHECK(r.E.provenance == Provenance::Computed);
  CHECK(r.mu0.provenance == Provenance::Computed);
  CHECK(r.eta0.provenance == Provenance::PaperConstant);
  CHECK(r.E.value == Approx(0.025753221640).epsilon(1e-9));
  CHECK(r.mu0.value == Approx(0.464735018).epsilon(1e-8));
  CHECK(r.delta > 0.9884);
  CHECK(r.delta < 0.9885);
  CHECK(r.delta == (1 + std::sqrt(1 - 4 * r.lambda0)) / 2);
}

TEST_CASE("replacing mu0 by its upper bound lowers delta") {
  PipelineConfig cfg;
  cfg.mu0 = Ingredient{0.5359, Provenance::Configured};
  const BoundReport upper = full_pipeline(cfg);
  const BoundReport certified = full_pipeline(PipelineConfig());
  CHECK(upper.delta < certified.delta);
  CHECK(upper.delta == Approx(0.986745186).epsilon(1e-8));
  CHECK(upper.mu0.provenance == Provenance::Configured);
}

TEST_CASE("report JSON") {
  const BoundReport r = full_pipeline(PipelineConfig::published_constants());
  const nlohmann::json j = r.to_json();
  for (const char* key : {"eta0", "E", "mu0", "lambda0", "delta"}) {
    CHECK(j.contains(key));
    CHECK(j["provenance"].contains(key));
  }
  CHECK(j["delta"].get<double>() == 0.988447);
  CHECK(j["lambda0"].get<double>() == 0.0114194);
  CHECK(j["provenance"]["E"] == "paper-constant");
  CHECK(j["provenance"]["delta"] == "computed");
}
