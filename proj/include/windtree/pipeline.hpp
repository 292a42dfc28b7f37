#pragma once

// Assembly of the critical-exponent bound from the spectral gap, the energy
// bound and the combinatorial spectrum bound.

#include <numbers>
#include <optional>
#include <string>

#include "json.hpp"

#include "windtree/energy_bound.hpp"
#include "windtree/gg_bound.hpp"

namespace windtree {

enum class Provenance { Computed, Configured, PaperConstant };

std::string to_string(Provenance p);

struct Ingredient {
  double value;
  Provenance provenance;
};

// Published constants used when an ingredient is fixed rather than computed.
inline constexpr double kPublishedEta0 = 0.25;
inline constexpr double kPublishedEnergy = 0.02575;
inline constexpr double kPublishedMu0 = 0.4647;

// lambda_0 >= eta E mu / (eta + E mu). Throws NonPositiveInput.
double rt_lambda0(double eta0, double E, double mu0);

// (1 + sqrt(1 - 4 l0)) / 2, the larger root of delta (1 - delta) = l0.
// Throws OutOfDomain unless 0 < l0 <= 1/4.
double delta_from_lambda0(double l0);

struct BoundReport {
  Ingredient eta0;
  Ingredient E;
  Ingredient mu0;
  double lambda0;
  double delta;

  // Flat object with eta0, E, mu0, lambda0, delta (6 significant digits)
  // and a "provenance" sub-object.
  nlohmann::json to_json() const;
};

struct PipelineConfig {
  Ingredient eta0{kPublishedEta0, Provenance::PaperConstant};
  std::optional<Ingredient> energy;  // computed by maximize_energy when empty
  std::optional<Ingredient> mu0;     // computed by optimize when empty
  EnergyConfig energy_config{};      // eta = 1/2 inside the energy formula
  int cone_radius = 10;              // ball used to extract the automaton
  double energy_tol = 1e-10;
  double gg_tol = 1e-10;

  // E = 0.02575 and mu0 = 0.4647 as published.
  static PipelineConfig published_constants();
};

// Throws Error when the cone-type verification fails.
BoundReport full_pipeline(const PipelineConfig& config);

}  // namespace windtree
