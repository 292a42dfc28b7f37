#pragma once

// Homology data of the square-obstacle wind-tree surface: the action of u^2
// on H^1, the induced 2x2 matrices on the flat subbundles E^{+-} and E^{-+},
// the representation rho of Gamma0 and the subgroup filters built from it.

#include <array>
#include <cstdint>
#include <ostream>
#include <string_view>

#include "windtree/matgroup.hpp"

namespace windtree {

// Ordered basis of the modeled part of H^1.
enum class HomologyBasis : std::uint8_t {
  h00, h01, h10, h11, v00, v01, v10, v11, c0, c1
};

inline constexpr std::size_t kHomologyRank = 10;

class HomologyClass {
 public:
  HomologyClass() { coeffs_.fill(0); }
  explicit HomologyClass(const std::array<std::int64_t, kHomologyRank>& coeffs) : coeffs_(coeffs) {}

  static HomologyClass basis(HomologyBasis e);

  std::int64_t operator[](HomologyBasis e) const { return coeffs_[static_cast<std::size_t>(e)]; }
  std::int64_t& operator[](HomologyBasis e) { return coeffs_[static_cast<std::size_t>(e)]; }
  const std::array<std::int64_t, kHomologyRank>& coefficients() const { return coeffs_; }

  HomologyClass operator+(const HomologyClass& o) const;
  HomologyClass operator-(const HomologyClass& o) const;
  HomologyClass operator*(std::int64_t k) const;

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

 private:
  std::array<std::int64_t, kHomologyRank> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const HomologyClass& x);

enum class Sigma : std::uint8_t { PlusMinus, MinusPlus };

std::string_view to_string(Sigma s);
Sigma parse_sigma(std::string_view text);  // "pm" / "+-" or "mp" / "-+"

// h^sigma and v^sigma as coefficient vectors of the cycle combinations.
HomologyClass h_sigma(Sigma s);
HomologyClass v_sigma(Sigma s);

// Action of u^2: h_ij* -> h_ij*, v_ij* -> v_ij* + h_ij* + c_i*, c_j* -> c_j*.
HomologyClass u2_action(const HomologyClass& x);

// Matrix of u^2 on E^sigma in the basis (h^sigma, v^sigma), obtained from
// u2_action after the substitutions c0 - c1 -> h^{+-} (sigma = +-) and
// c-part -> 0 (sigma = -+). Throws SubstitutionFailure.
GroupElement induced_u2_matrix(Sigma s);

// Images of the Gamma0 generators: +- : (u^3, tu), -+ : (u, tu^3).
const Alphabet<BigInt>& rho_alphabet(Sigma s);
const Alphabet<std::int64_t>& rho_alphabet_small(Sigma s);

// rho_{E^sigma}(w), PSL-normalized.
GroupElement rho(Sigma s, const Word& w);

// rho(sigma, w) is the PSL identity.
bool in_kernel(Sigma s, const Word& w);

// rho(sigma, w) e_f = +-e_f with e_f = (1,0)^T for +- and (0,1)^T for -+.
bool in_gamma_bad(Sigma s, const Word& w);

// Matrix-level versions of the filters, applied to an image of rho.
template <class Int>
bool is_kernel_image(const Matrix2<Int>& image) {
  return image.is_psl_identity();
}

template <class Int>
bool is_bad_image(Sigma s, const Matrix2<Int>& image) {
  if (s == Sigma::PlusMinus) return image.c() == 0;  // then a = d = +-1
  return image.b() == 0;
}

}  // namespace windtree
