#include "pcc/field.hpp"

#include <algorithm>
#include <bit>

namespace pcc {

namespace {

// Low L bits of the reduction polynomial for GF(2^L), L = 1..64 (x^L term
// implicit). Smallest primitive polynomial per degree, except degree 8 which
// is pinned to x^8+x^4+x^3+x+1 (irreducible, not primitive).
constexpr std::array<u64, 65> kDefaultReductionLow = {
    0,     0x1,   0x3,  0x3,  0x3,  0x5,  0x3,  0x3,  0x1b,  0x11, 0x9,
    0x5,   0x53,  0x1b, 0x2b, 0x3,  0x2d, 0x9,  0x27, 0x27,  0x9,  0x5,
    0x3,   0x21,  0x1b, 0x9,  0x47, 0x27, 0x9,  0x5,  0x53,  0x9,  0xaf,
    0x53,  0xe7,  0x5,  0x77, 0x3f, 0x63, 0x11, 0x39, 0x9,   0x3f, 0x59,
    0x65,  0x1b,  0x12f, 0x21, 0xb7, 0x71, 0x1d, 0x4b, 0x9,  0x47, 0x7d,
    0x47,  0x95,  0x2d, 0x63, 0x7b, 0x3,  0x27, 0x69, 0x3,   0x1b};

// Remainder of polynomial division over GF(2); operands fit in 64 bits.
u64 gf2PolyMod(u64 a, u64 m) {
  int dm = 63 - std::countl_zero(m);
  while (a != 0) {
    int da = 63 - std::countl_zero(a);
    if (da < dm) break;
    a ^= m << (da - dm);
  }
  return a;
}

// Trial division by every polynomial of degree 1..deg/2. Only used for
// deg <= 16 where the full pattern fits comfortably.
bool gf2Irreducible(u64 f, int deg) {
  for (int d = 1; d <= deg / 2; ++d) {
    for (u64 g = u64{1} << d; g < (u64{1} << (d + 1)); ++g) {
      if (gf2PolyMod(f, g) == 0) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(int bit_width, u64 reduction_low)
    : bit_width_(bit_width), reduction_low_(reduction_low) {
  if (bit_width < 1 || bit_width > 64) {
    throw ConfigError("Field: bit width must be in 1..64");
  }
  mask_ = bit_width == 64 ? ~u64{0} : (u64{1} << bit_width) - 1;
  if ((reduction_low & ~mask_) != 0) {
    throw ConfigError("Field: reduction polynomial low bits exceed width");
  }
  if ((reduction_low & 1) == 0) {
    throw ConfigError("Field: reduction polynomial must have nonzero constant term");
  }
  if (bit_width <= 16) {
    u64 full = (u64{1} << bit_width) | reduction_low;
    if (!gf2Irreducible(full, bit_width)) {
      throw ConfigError("Field: reduction polynomial is reducible");
    }
  }
}

Field Field::withDefaultPoly(int bit_width) {
  return Field(bit_width, defaultReductionLow(bit_width));
}

u64 Field::defaultReductionLow(int bit_width) {
  if (bit_width < 1 || bit_width > 64) {
    throw ConfigError("Field: bit width must be in 1..64");
  }
  return kDefaultReductionLow[static_cast<size_t>(bit_width)];
}

u64 Field::mul(u64 a, u64 b) const {
  a &= mask_;
  b &= mask_;
  u64 acc = 0;
  u64 top = u64{1} << (bit_width_ - 1);
  while (b != 0) {
    if (b & 1) acc ^= a;
    b >>= 1;
    bool overflow = (a & top) != 0;
    a = (a << 1) & mask_;
    if (overflow) a ^= reduction_low_;
  }
  return acc;
}

u64 Field::pow(u64 a, u64 e) const {
  u64 result = 1;
  a &= mask_;
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

u64 Field::inv(u64 a) const {
  a &= mask_;
  if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
  return pow(a, mask_ - 1);  // a^(2^L - 2)
}

u64 Field::evalPoly(const FieldPoly& p, u64 x) const {
  u64 acc = 0;
  for (size_t i = p.coeffs.size(); i-- > 0;) {
    acc = add(mul(acc, x), p.coeffs[i]);
  }
  return acc;
}

FieldPoly Field::interpolate(std::span<const u64> xs, std::span<const u64> ys) const {
  size_t n = xs.size();
  if (n == 0 || ys.size() != n) {
    throw std::domain_error("interpolate: need matching nonempty point lists");
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if ((xs[i] & mask_) == (xs[j] & mask_)) {
        throw std::domain_error("interpolate: duplicate evaluation point");
      }
    }
  }

  // master(x) = prod_i (x + x_i), degree n
  std::vector<u64> master(n + 1, 0);
  master[0] = 1;
  size_t deg = 0;
  for (size_t i = 0; i < n; ++i) {
    u64 xi = xs[i] & mask_;
    for (size_t j = deg + 1; j >= 1; --j) {
      master[j] = master[j - 1] ^ mul(xi, master[j]);
    }
    master[0] = mul(xi, master[0]);
    ++deg;
  }

  FieldPoly result;
  result.coeffs.assign(n, 0);
  std::vector<u64> q(n);
  for (size_t i = 0; i < n; ++i) {
    u64 xi = xs[i] & mask_;
    // synthetic division: q = master / (x + x_i)
    q[n - 1] = master[n];
    for (size_t j = n - 1; j-- > 0;) {
      q[j] = master[j + 1] ^ mul(xi, q[j + 1]);
    }
    u64 denom = 0;
    for (size_t j = n; j-- > 0;) denom = add(mul(denom, xi), q[j]);
    u64 scale = mul(ys[i] & mask_, inv(denom));
    for (size_t j = 0; j < n; ++j) result.coeffs[j] ^= mul(scale, q[j]);
  }
  return result;
}

std::vector<u64> Field::enumeratePoints(u64 count) const {
  if (count > pointCapacity()) {
    throw CapacityError("enumeratePoints: field has only " +
                        std::to_string(pointCapacity()) + " nonzero elements");
  }
  std::vector<u64> pts(static_cast<size_t>(count));
  for (u64 i = 0; i < count; ++i) pts[static_cast<size_t>(i)] = i + 1;
  return pts;
}

FieldPoly Field::randomPolynomial(std::mt19937_64& rng, int degree_bound,
                                  std::span<const u64> pinned_high) const {
  if (degree_bound < 0) throw std::domain_error("randomPolynomial: negative degree bound");
  size_t size = static_cast<size_t>(degree_bound) + 1;
  if (pinned_high.size() > size) {
    throw std::domain_error("randomPolynomial: pinned block larger than polynomial");
  }
  FieldPoly p;
  p.coeffs.assign(size, 0);
  size_t free_count = size - pinned_high.size();
  for (size_t i = 0; i < free_count; ++i) p.coeffs[i] = randomElement(rng);
  for (size_t i = 0; i < pinned_high.size(); ++i) {
    p.coeffs[free_count + i] = pinned_high[i] & mask_;
  }
  return p;
}

}  // namespace pcc
