#pragma once
// field.hpp - exact arithmetic in GF(2^L): carry-less multiplication,
// polynomial evaluation, Lagrange interpolation.

#include <array>
#include <span>

#include "pcc/common.hpp"

namespace pcc {

// Polynomial over GF(2^L), coefficients low-to-high: coeffs[i] multiplies x^i.
// The vector length fixes the degree bound; trailing zeros are allowed.
struct FieldPoly {
  std::vector<u64> coeffs;
  int degreeBound() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const FieldPoly&) const = default;
};

// GF(2^L) in polynomial basis, least-significant bit = coefficient of x^0.
// The reduction polynomial is passed as its low L bits; the x^L term is
// implicit. Irreducibility is verified by trial division for L <= 16;
// wider fields rely on the built-in table (smallest primitive polynomial
// per degree, except degree 8 which is the fixed x^8+x^4+x^3+x+1).
class Field {
 public:
  Field(int bit_width, u64 reduction_low);
  static Field withDefaultPoly(int bit_width);
  static u64 defaultReductionLow(int bit_width);

  int bitWidth() const { return bit_width_; }
  u64 reductionLow() const { return reduction_low_; }
  u64 mask() const { return mask_; }
  // Number of distinct nonzero elements, 2^L - 1.
  u64 pointCapacity() const { return mask_; }

  u64 add(u64 a, u64 b) const { return (a ^ b) & mask_; }
  u64 mul(u64 a, u64 b) const;
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const;

  u64 evalPoly(const FieldPoly& p, u64 x) const;

  // Unique polynomial of degree < xs.size() through the given points.
  FieldPoly interpolate(std::span<const u64> xs, std::span<const u64> ys) const;

  // First `count` nonzero elements in ascending value order.
  std::vector<u64> enumeratePoints(u64 count) const;

  u64 randomElement(std::mt19937_64& rng) const { return rng() & mask_; }

  // Coefficients below the pinned block are drawn uniformly; pinned_high
  // occupies the top positions (degree_bound+1-|pinned| .. degree_bound).
  FieldPoly randomPolynomial(std::mt19937_64& rng, int degree_bound,
                             std::span<const u64> pinned_high = {}) const;

  bool operator==(const Field&) const = default;

 private:
  int bit_width_;
  u64 reduction_low_;
  u64 mask_;
};

}  // namespace pcc
