#include "windtree/energy_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

namespace windtree {

namespace {

constexpr int kScanPoints = 400;

// Largest L allowed at radius R by 2 e^L tanh^power(R) <= 1.
double active_length(double R, int power) {
  return -std::log(2.0 * std::pow(std::tanh(R), power));
}

EnergyOptimum maximize_on_constraint(const EnergyConfig& cfg, double tol, int power) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  // L > 0 needs tanh(R)^power < 1/2.
  const double r_max = std::atanh(std::pow(0.5, 1.0 / power));
  auto neg_energy = [&](double R) {
    return -energy(ZoneParams(active_length(R, power), R), cfg);
  };

  const double h = r_max / kScanPoints;
  int best = 1;
  double best_value = neg_energy(h);
  for (int k = 2; k < kScanPoints; ++k) {
    const double v = neg_energy(k * h);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  const int digits = std::numeric_limits<double>::digits / 2;
  const int bits = std::clamp(static_cast<int>(std::ceil(-std::log2(tol))) + 1, 8, digits);
  const double lo = (best - 1) * h;
  const double hi = std::min((best + 1) * h, r_max * (1.0 - 1e-12));
  const auto [r_star, value] =
      boost::math::tools::brent_find_minima(neg_energy, std::max(lo, h * 1e-6), hi, bits);
  const ZoneParams p(active_length(r_star, power), r_star);
  return EnergyOptimum{p, energy(p, cfg)};
}

}  // namespace

ZoneParams::ZoneParams(double length, double radius) : L(length), R(radius) {
  if (!(L > 0.0) || !(R > 0.0) || !std::isfinite(L) || !std::isfinite(R)) {
    throw InvalidArgument("zone length and radius must be positive");
  }
}

EnergyConfig::EnergyConfig(double eta_value, double area) : eta(eta_value), domain_area(area) {
  if (!(eta > 0.0) || !(domain_area > 0.0)) {
    throw InvalidArgument("eta and domain area must be positive");
  }
}

double admissibility_value(const ZoneParams& p) {
  const double t = std::tanh(p.R);
  return 2.0 * std::exp(p.L) * t * t * t;
}

bool is_admissible(const ZoneParams& p) { return admissibility_value(p) <= 1.0; }

AreaCapacity area_capacity(const ZoneParams& p) {
  const double s = std::sinh(p.R);
  return {p.L * s, p.L / std::atan(s)};
}

double energy(const ZoneParams& p, const EnergyConfig& cfg) {
  const auto [area, capacity] = area_capacity(p);
  const double eta_area = cfg.eta * area;
  const double root_sum = std::sqrt(eta_area) + std::sqrt(capacity);
  return eta_area * capacity / (root_sum * root_sum) / (2.0 * cfg.domain_area);
}

EnergyOptimum maximize_energy(const EnergyConfig& cfg, double tol) {
  return maximize_on_constraint(cfg, tol, 3);
}

EnergyOptimum maximize_energy_geometric(const EnergyConfig& cfg, double tol) {
  return maximize_on_constraint(cfg, tol, 2);
}

TransitionPoint transition_point(double h, double R) {
  if (!(h > 0.0) || !(R > 0.0)) throw InvalidArgument("h and R must be positive");
  const double t = std::tanh(R);
  HPoint z(1.0 - h * t, h / std::cosh(R));
  const bool printed = 2.0 * t * t <= h && h <= 1.0 / t;
  return TransitionPoint{z, in_t0(z), printed};
}

bool in_t0(const HPoint& z, double tol) {
  return z.re() >= -tol && z.re() <= 1.0 + tol && std::norm(z.z()) >= 1.0 - tol;
}

}  // namespace windtree
