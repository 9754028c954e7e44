#pragma once
// hkdf.hpp - SHA-256 / HMAC-SHA256 wrappers and RFC 5869 extract-then-expand.

#include <span>

#include "pcc/common.hpp"

namespace pcc {

std::vector<u8> sha256(std::span<const u8> data);
std::string sha256Hex(std::span<const u8> data);

std::vector<u8> hmacSha256(std::span<const u8> key, std::span<const u8> data);

std::vector<u8> hkdfExtract(std::span<const u8> salt, std::span<const u8> ikm);
std::vector<u8> hkdfExpand(std::span<const u8> prk, std::span<const u8> info,
                           size_t length);
std::vector<u8> hkdf(std::span<const u8> salt, std::span<const u8> ikm,
                     std::span<const u8> info, size_t length);

}  // namespace pcc
