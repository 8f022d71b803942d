#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flowdbn {

// Builds and throws a std::runtime_error from streamable parts.
template <typename... Args>
[[noreturn]] inline void fail(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  throw std::runtime_error(os.str());
}

template <typename... Args>
inline void require(bool cond, Args&&... args) {
  if (!cond) fail(std::forward<Args>(args)...);
}

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic sub-seed for a named role (model init, data order, ...),
// so that changing one consumer does not shift the streams of the others.
inline uint64_t derive_seed(uint64_t seed, std::string_view role) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char ch : role) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return splitmix64(seed ^ h);
}

}  // namespace flowdbn
