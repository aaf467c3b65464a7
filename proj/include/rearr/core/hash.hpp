#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace rearr {

inline constexpr uint64_t kFnvOffset = 14695981039346656037ull;
inline constexpr uint64_t kFnvPrime = 1099511628211ull;

inline uint64_t fnv1a(const void* data, size_t len, uint64_t h = kFnvOffset) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

inline uint64_t fnv1a(const std::string& s, uint64_t h = kFnvOffset) {
  return fnv1a(s.data(), s.size(), h);
}

std::string hex64(uint64_t v);

// FNV-1a over a file's bytes; throws std::runtime_error if unreadable.
uint64_t hash_file(const std::string& path);

}  // namespace rearr
