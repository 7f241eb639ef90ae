#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gabm {

// 64-bit FNV-1a over the bytes of `data`.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char byte : data) {
    h ^= byte;
    h *= 1099511628211ull;
  }
  return h;
}

// 16 lowercase hex digits, zero padded.
inline std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xF];
    value >>= 4;
  }
  return out;
}

}  // namespace gabm
