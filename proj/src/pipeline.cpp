#include "windtree/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "windtree/cayley.hpp"
#include "windtree/errors.hpp"

namespace windtree {

namespace {

double six_digits(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::Configured: return "configured";
    case Provenance::PaperConstant: return "paper-constant";
  }
  return "?";
}

double rt_lambda0(double eta0, double E, double mu0) {
  if (!(eta0 > 0.0) || !(E > 0.0) || !(mu0 > 0.0)) {
    throw NonPositiveInput("eta0, E and mu0 must all be positive");
  }
  const double x = E * mu0;
  return eta0 * x / (eta0 + x);
}

double delta_from_lambda0(double l0) {
  if (!(l0 > 0.0) || l0 > 0.25) throw OutOfDomain("lambda0 must lie in (0, 1/4]");
  return (1.0 + std::sqrt(1.0 - 4.0 * l0)) / 2.0;
}

nlohmann::json BoundReport::to_json() const {
  return {{"eta0", six_digits(eta0.value)},
          {"E", six_digits(E.value)},
          {"mu0", six_digits(mu0.value)},
          {"lambda0", six_digits(lambda0)},
          {"delta", six_digits(delta)},
          {"provenance",
           {{"eta0", to_string(eta0.provenance)},
            {"E", to_string(E.provenance)},
            {"mu0", to_string(mu0.provenance)},
            {"lambda0", "computed"},
            {"delta", "computed"}}}};
}

PipelineConfig PipelineConfig::published_constants() {
  PipelineConfig cfg;
  cfg.energy = Ingredient{kPublishedEnergy, Provenance::PaperConstant};
  cfg.mu0 = Ingredient{kPublishedMu0, Provenance::PaperConstant};
  return cfg;
}

BoundReport full_pipeline(const PipelineConfig& config) {
  Ingredient energy_value{0.0, Provenance::Computed};
  if (config.energy) {
    energy_value = *config.energy;
  } else {
    energy_value.value = maximize_energy(config.energy_config, config.energy_tol).energy;
  }

  Ingredient mu0_value{0.0, Provenance::Computed};
  if (config.mu0) {
    mu0_value = *config.mu0;
  } else {
    const ConeTypeReport cones = verify_cone_types(config.cone_radius);
    if (!cones.pass || !cones.automaton) {
      throw Error("cone-type verification failed: " +
                  cones.counterexample.value_or("automaton incomplete at this radius"));
    }
    mu0_value.value = optimize(*cones.automaton, config.gg_tol).bound;
  }

  const double l0 = rt_lambda0(config.eta0.value, energy_value.value, mu0_value.value);
  return BoundReport{config.eta0, energy_value, mu0_value, l0, delta_from_lambda0(l0)};
}

}  // namespace windtree
