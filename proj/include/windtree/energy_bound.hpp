#pragma once

// Energy lower bound on the Dirichlet domain D = {|z +- 1/2| >= 1/2, |Re z| <= 1}
// of Gamma0, built from transition zones of length L and radius R around the
// boundary faces.

#include <numbers>

#include "windtree/hyperbolic.hpp"

namespace windtree {

struct ZoneParams {
  ZoneParams(double length, double radius);  // throws InvalidArgument unless both > 0
  double L;
  double R;
};

struct EnergyConfig {
  EnergyConfig() = default;
  EnergyConfig(double eta, double domain_area);  // throws InvalidArgument unless both > 0
  double eta = 0.5;                             // spectral gap used inside the energy
  double domain_area = 2.0 * std::numbers::pi;  // Area(D)
};

// 2 e^L tanh^3(R) <= 1.
double admissibility_value(const ZoneParams& p);
bool is_admissible(const ZoneParams& p);

struct AreaCapacity {
  double area;      // L sinh R
  double capacity;  // L / arctan(sinh R)
};
AreaCapacity area_capacity(const ZoneParams& p);

// eta A C / (sqrt(eta A) + sqrt(C))^2 / (2 Area(D)). No admissibility check.
double energy(const ZoneParams& p, const EnergyConfig& cfg);

struct EnergyOptimum {
  ZoneParams params;
  double energy;
};

// Maximizes energy over the admissible region. Energy increases with L, so
// the search runs along the active constraint L = -ln(2 tanh^3 R).
EnergyOptimum maximize_energy(const EnergyConfig& cfg, double tol);

// Same search on the constraint 2 e^L tanh^2(R) <= 1 that follows from the
// geometric containment test below.
EnergyOptimum maximize_energy_geometric(const EnergyConfig& cfg, double tol);

struct TransitionPoint {
  HPoint point;            // 1 - h tanh R + i h sech R
  bool contained;          // point lies in T0 = T(1, i, inf) = {0 <= Re z <= 1, |z| >= 1}
  bool printed_condition;  // 2 tanh^2 R <= h <= coth R
};

// Point at distance R from 1 + hi on the geodesic orthogonal to Re z = 1.
TransitionPoint transition_point(double h, double R);

// Direct membership in T(1, i, inf) with a boundary tolerance.
bool in_t0(const HPoint& z, double tol = 1e-9);

}  // namespace windtree
