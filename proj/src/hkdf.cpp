#include "pcc/hkdf.hpp"

#include <openssl/hmac.h>
#include <openssl/sha.h>

namespace pcc {

namespace {
constexpr size_t kHashLen = 32;
const u8 kEmpty[1] = {0};

const u8* ptrOrDummy(std::span<const u8> s) {
  return s.empty() ? kEmpty : s.data();
}
}  // namespace

std::vector<u8> sha256(std::span<const u8> data) {
  std::vector<u8> out(kHashLen);
  SHA256(ptrOrDummy(data), data.size(), out.data());
  return out;
}

std::string sha256Hex(std::span<const u8> data) {
  static const char hex[] = "0123456789abcdef";
  auto digest = sha256(data);
  std::string s;
  s.reserve(2 * kHashLen);
  for (u8 b : digest) {
    s += hex[b >> 4];
    s += hex[b & 0xf];
  }
  return s;
}

std::vector<u8> hmacSha256(std::span<const u8> key, std::span<const u8> data) {
  std::vector<u8> out(kHashLen);
  unsigned int len = 0;
  HMAC(EVP_sha256(), ptrOrDummy(key), static_cast<int>(key.size()),
       ptrOrDummy(data), data.size(), out.data(), &len);
  out.resize(len);
  return out;
}

std::vector<u8> hkdfExtract(std::span<const u8> salt, std::span<const u8> ikm) {
  return hmacSha256(salt, ikm);
}

std::vector<u8> hkdfExpand(std::span<const u8> prk, std::span<const u8> info,
                           size_t length) {
  if (length > 255 * kHashLen) {
    throw std::invalid_argument("hkdfExpand: output length too large");
  }
  std::vector<u8> okm;
  okm.reserve(length);
  std::vector<u8> t;
  u8 counter = 1;
  while (okm.size() < length) {
    std::vector<u8> block = t;
    block.insert(block.end(), info.begin(), info.end());
    block.push_back(counter++);
    t = hmacSha256(prk, block);
    size_t take = std::min(t.size(), length - okm.size());
    okm.insert(okm.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return okm;
}

std::vector<u8> hkdf(std::span<const u8> salt, std::span<const u8> ikm,
                     std::span<const u8> info, size_t length) {
  auto prk = hkdfExtract(salt, ikm);
  return hkdfExpand(prk, info, length);
}

}  // namespace pcc
