#include "windtree/homology_rep.hpp"

#include <sstream>
#include <string>

namespace windtree {

namespace {

using HB = HomologyBasis;

constexpr std::array<HB, 4> kH = {HB::h00, HB::h01, HB::h10, HB::h11};
constexpr std::array<HB, 4> kV = {HB::v00, HB::v01, HB::v10, HB::v11};

// Sign of the (i, j) cycle in the sigma combination; slots ordered 00, 01, 10, 11.
constexpr std::array<int, 4> sign_pattern(Sigma s) {
  return s == Sigma::PlusMinus ? std::array<int, 4>{1, 1, -1, -1}
                               : std::array<int, 4>{1, -1, 1, -1};
}

// Coefficient k with x == k * pattern on the given slots, if any.
bool match_pattern(const HomologyClass& x, const std::array<HB, 4>& slots,
                   const std::array<int, 4>& pattern, std::int64_t& k) {
  k = x[slots[0]] * pattern[0];
  for (std::size_t n = 0; n < 4; ++n) {
    if (x[slots[n]] != k * pattern[n]) return false;
  }
  return true;
}

// Coordinates of x in the basis (h^sigma, v^sigma) after substituting the
// c-part.
std::array<std::int64_t, 2> coordinates(Sigma s, const HomologyClass& x) {
  std::int64_t hc = 0;
  std::int64_t vc = 0;
  const auto pattern = sign_pattern(s);
  HomologyClass rest = x;
  const std::int64_t c0 = x[HB::c0];
  const std::int64_t c1 = x[HB::c1];
  rest[HB::c0] = 0;
  rest[HB::c1] = 0;
  if (s == Sigma::PlusMinus) {
    // c^{+-} = 2c0 - 2c1 = 2h^{+-}, i.e. c0 - c1 -> h^{+-}
    if (c0 + c1 != 0) {
      throw SubstitutionFailure("c-part is not a multiple of c^{+-}");
    }
    hc += c0;
  } else if (c0 != 0 || c1 != 0) {
    throw SubstitutionFailure("c-part does not vanish for sigma = -+");
  }
  std::int64_t k = 0;
  if (!match_pattern(rest, kH, pattern, k)) {
    throw SubstitutionFailure("h-part is not a multiple of h^sigma");
  }
  hc += k;
  if (!match_pattern(rest, kV, pattern, k)) {
    throw SubstitutionFailure("v-part is not a multiple of v^sigma");
  }
  vc += k;
  return {hc, vc};
}

}  // namespace

HomologyClass HomologyClass::basis(HomologyBasis e) {
  HomologyClass x;
  x[e] = 1;
  return x;
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
  HomologyClass x = *this;
  for (std::size_t n = 0; n < kHomologyRank; ++n) x.coeffs_[n] += o.coeffs_[n];
  return x;
}

HomologyClass HomologyClass::operator-(const HomologyClass& o) const { return *this + o * -1; }

HomologyClass HomologyClass::operator*(std::int64_t k) const {
  HomologyClass x = *this;
  for (auto& c : x.coeffs_) c *= k;
  return x;
}

std::ostream& operator<<(std::ostream& os, const HomologyClass& x) {
  os << "[";
  for (std::size_t n = 0; n < kHomologyRank; ++n) os << (n ? " " : "") << x.coefficients()[n];
  return os << "]";
}

std::string_view to_string(Sigma s) { return s == Sigma::PlusMinus ? "+-" : "-+"; }

Sigma parse_sigma(std::string_view text) {
  if (text == "pm" || text == "+-") return Sigma::PlusMinus;
  if (text == "mp" || text == "-+") return Sigma::MinusPlus;
  throw ParseError("unknown sigma '" + std::string(text) + "' (expected pm or mp)");
}

HomologyClass h_sigma(Sigma s) {
  HomologyClass x;
  const auto pattern = sign_pattern(s);
  for (std::size_t n = 0; n < 4; ++n) x[kH[n]] = pattern[n];
  return x;
}

HomologyClass v_sigma(Sigma s) {
  HomologyClass x;
  const auto pattern = sign_pattern(s);
  for (std::size_t n = 0; n < 4; ++n) x[kV[n]] = pattern[n];
  return x;
}

HomologyClass u2_action(const HomologyClass& x) {
  HomologyClass y = x;
  for (std::size_t n = 0; n < 4; ++n) {
    const std::int64_t v = x[kV[n]];
    y[kH[n]] += v;
    y[n < 2 ? HB::c0 : HB::c1] += v;
  }
  return y;
}

GroupElement induced_u2_matrix(Sigma s) {
  const auto h = coordinates(s, u2_action(h_sigma(s)));
  const auto v = coordinates(s, u2_action(v_sigma(s)));
  const std::int64_t det = h[0] * v[1] - v[0] * h[1];
  if (det != 1) {
    std::ostringstream msg;
    msg << "induced matrix has determinant " << det;
    throw SubstitutionFailure(msg.str());
  }
  return GroupElement(h[0], v[0], h[1], v[1]);
}

const Alphabet<BigInt>& rho_alphabet(Sigma s) {
  static const Alphabet<BigInt> plus_minus(u_power(3), tu_power(1));
  static const Alphabet<BigInt> minus_plus(u_power(1), tu_power(3));
  return s == Sigma::PlusMinus ? plus_minus : minus_plus;
}

const Alphabet<std::int64_t>& rho_alphabet_small(Sigma s) {
  static const Alphabet<std::int64_t> plus_minus(SmallMatrix(1, 3, 0, 1), SmallMatrix(1, 0, 1, 1));
  static const Alphabet<std::int64_t> minus_plus(SmallMatrix(1, 1, 0, 1), SmallMatrix(1, 0, 3, 1));
  return s == Sigma::PlusMinus ? plus_minus : minus_plus;
}

GroupElement rho(Sigma s, const Word& w) { return evaluate(w, rho_alphabet(s)); }

bool in_kernel(Sigma s, const Word& w) { return is_kernel_image(rho(s, w)); }

bool in_gamma_bad(Sigma s, const Word& w) { return is_bad_image(s, rho(s, w)); }

}  // namespace windtree
