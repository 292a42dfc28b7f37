#pragma once

// Upper half-plane geometry.

#include <complex>

#include "windtree/matgroup.hpp"

namespace windtree {

// Point of the upper half-plane; im() > 0 always.
class HPoint {
 public:
  HPoint(double re, double im);
  static HPoint i() { return HPoint(0.0, 1.0); }

  double re() const { return re_; }
  double im() const { return im_; }
  std::complex<double> z() const { return {re_, im_}; }

 private:
  double re_;
  double im_;
};

// gz = (az + b) / (cz + d).
HPoint mobius(const GroupElement& g, const HPoint& z);
HPoint mobius(const SmallMatrix& g, const HPoint& z);

// acosh(1 + |z - w|^2 / (2 Im z Im w)).
double dist(const HPoint& z, const HPoint& w);

// d(i, g i) through cosh d = (a^2 + b^2 + c^2 + d^2) / 2.
double displacement(const GroupElement& g);
double displacement(const SmallMatrix& g);

// |g^{-1} x| for x = (1, 0)^T, i.e. sqrt(c^2 + d^2). Equals Im(g i)^{-1/2}.
double cusp_norm(const GroupElement& g);
double cusp_norm(const SmallMatrix& g);

}  // namespace windtree
