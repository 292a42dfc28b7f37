#include "windtree/hyperbolic.hpp"

#include <cmath>
#include <sstream>

namespace windtree {

namespace {

double to_double(const BigInt& x) { return x.convert_to<double>(); }
double to_double(std::int64_t x) { return static_cast<double>(x); }

template <class Int>
HPoint apply(const Matrix2<Int>& g, const HPoint& z) {
  const std::complex<double> a = to_double(g.a()), b = to_double(g.b());
  const std::complex<double> c = to_double(g.c()), d = to_double(g.d());
  const std::complex<double> den = c * z.z() + d;
  const std::complex<double> w = (a * z.z() + b) / den;
  // Im(gz) = Im(z) / |cz + d|^2 exactly; avoids cancellation in w.imag().
  return HPoint(w.real(), z.im() / std::norm(den));
}

template <class Int>
double displacement_of(const Matrix2<Int>& g) {
  const double half_norm = to_double(g.norm2()) / 2.0;
  return std::acosh(std::max(1.0, half_norm));
}

template <class Int>
double cusp_norm_of(const Matrix2<Int>& g) {
  return std::sqrt(to_double(g.c() * g.c() + g.d() * g.d()));
}

}  // namespace

HPoint::HPoint(double re, double im) : re_(re), im_(im) {
  if (!(im > 0.0) || !std::isfinite(re) || !std::isfinite(im)) {
    std::ostringstream msg;
    msg << "not a point of the upper half-plane: " << re << " + " << im << "i";
    throw InvalidArgument(msg.str());
  }
}

HPoint mobius(const GroupElement& g, const HPoint& z) { return apply(g, z); }
HPoint mobius(const SmallMatrix& g, const HPoint& z) { return apply(g, z); }

double dist(const HPoint& z, const HPoint& w) {
  const double dx = z.re() - w.re();
  const double dy = z.im() - w.im();
  return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * z.im() * w.im()));
}

double displacement(const GroupElement& g) { return displacement_of(g); }
double displacement(const SmallMatrix& g) { return displacement_of(g); }

double cusp_norm(const GroupElement& g) { return cusp_norm_of(g); }
double cusp_norm(const SmallMatrix& g) { return cusp_norm_of(g); }

}  // namespace windtree
