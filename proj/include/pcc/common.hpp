#pragma once
// common.hpp - shared aliases, error types, bit strings, small combinatorics

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcc {

using u8 = std::uint8_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LedgerViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MixedEpochError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientSharesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// User subset, sorted ascending, no duplicates.
using Subset = std::vector<int>;

u64 binomial(int n, int k);

// All size-k subsets of {0,...,n-1} in lexicographic order.
std::vector<Subset> subsetsOfSize(int n, int k);

// Index of u within s, or -1.
int rankIn(const Subset& s, int u);
bool contains(const Subset& s, int u);

std::string formatSubset(const Subset& s, char sep = ',');

// Deterministic sub-seed derivation (splitmix64-style mixing).
u64 mixSeed(u64 seed, u64 a, u64 b = 0);

// Bit string with explicit length. Bit i lives at bytes[i/8], position i%8.
// Bits beyond bit_count are kept zero so equality is value equality.
struct BitString {
  std::vector<u8> bytes;
  i64 bit_count = 0;

  static BitString zeros(i64 bits);
  static BitString random(std::mt19937_64& rng, i64 bits);

  bool getBit(i64 i) const { return (bytes[static_cast<size_t>(i >> 3)] >> (i & 7)) & 1; }
  void setBit(i64 i, bool v);

  bool operator==(const BitString&) const = default;
};

}  // namespace pcc
