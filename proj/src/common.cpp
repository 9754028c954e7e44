#include "pcc/common.hpp"

#include <algorithm>

namespace pcc {

u64 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  u64 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<u64>(n - k + i) / static_cast<u64>(i);
  }
  return result;
}

std::vector<Subset> subsetsOfSize(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

int rankIn(const Subset& s, int u) {
  auto it = std::lower_bound(s.begin(), s.end(), u);
  if (it == s.end() || *it != u) return -1;
  return static_cast<int>(it - s.begin());
}

bool contains(const Subset& s, int u) { return rankIn(s, u) >= 0; }

std::string formatSubset(const Subset& s, char sep) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(s[i]);
  }
  return out;
}

u64 mixSeed(u64 seed, u64 a, u64 b) {
  u64 z = seed + 0x9e3779b97f4a7c15ull * (a + 1) + 0xbf58476d1ce4e5b9ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

BitString BitString::zeros(i64 bits) {
  BitString s;
  s.bit_count = bits;
  s.bytes.assign(static_cast<size_t>((bits + 7) / 8), 0);
  return s;
}

BitString BitString::random(std::mt19937_64& rng, i64 bits) {
  BitString s = zeros(bits);
  for (size_t i = 0; i < s.bytes.size(); ++i) s.bytes[i] = static_cast<u8>(rng() & 0xff);
  int tail = static_cast<int>(bits & 7);
  if (tail != 0 && !s.bytes.empty()) s.bytes.back() &= static_cast<u8>((1u << tail) - 1);
  return s;
}

void BitString::setBit(i64 i, bool v) {
  u8& byte = bytes[static_cast<size_t>(i >> 3)];
  u8 bit = static_cast<u8>(1u << (i & 7));
  byte = v ? static_cast<u8>(byte | bit) : static_cast<u8>(byte & ~bit);
}

}  // namespace pcc
