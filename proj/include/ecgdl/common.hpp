#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace ecgdl {

inline constexpr const char* kVersion = "1.0.0";

// Error hierarchy. Every failure mode maps onto one of these so callers
// (and the CLI exit-code table) can distinguish them.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape/size disagreement between tensors or layers.
class dimension_error : public error {
 public:
  using error::error;
};

// NaN/Inf or other numeric breakdown.
class numeric_error : public error {
 public:
  using error::error;
};

// Invalid configuration value (rates, ranges, spec fields).
class config_error : public error {
 public:
  using error::error;
};

// API misuse, e.g. consuming a layer cache twice.
class usage_error : public error {
 public:
  using error::error;
};

// Malformed text input (headers, CSV rows).
class parse_error : public error {
 public:
  using error::error;
};

// Malformed binary input (checkpoints, signal files).
class format_error : public error {
 public:
  using error::error;
};

class io_error : public error {
 public:
  using error::error;
};

// Dataset-contract violations: patient overlap, fold-10 leakage.
class integrity_error : public error {
 public:
  using error::error;
};

// Inconsistent dataset content (unknown label subclass, bad fold id).
class data_error : public error {
 public:
  using error::error;
};

// Batch or lead without enough variation to normalize.
class degenerate_data_error : public data_error {
 public:
  using data_error::data_error;
};

// Checkpoint/spec disagreement and similar contract mismatches.
class validation_error : public error {
 public:
  using error::error;
};

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derives an independent seed stream from a master seed and a stream tag.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t salt = 0) {
  return splitmix64(seed ^ splitmix64(stream + 0x51ed2700) ^ splitmix64(salt));
}

inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s,
                             std::uint64_t h = 1469598103934665603ull) {
  return fnv1a64(s.data(), s.size(), h);
}

inline std::string to_hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace ecgdl
