#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dyngraph {

/// Smallest power of two >= n. Rejects n = 0.
inline std::uint64_t closest_pow2(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("closest_pow2: n must be positive");
  }
  return std::bit_ceil(n);
}

/// Root-to-node path for the 1-based level-order position k of a complete
/// binary tree: the binary representation of k with the leading 1 removed.
/// '0' selects the left child, '1' the right child. The root (k = 1) has an
/// empty path.
inline std::string cbt_position_bits(std::uint64_t k) {
  if (k == 0) {
    throw std::invalid_argument("cbt_position_bits: position must be >= 1");
  }
  const int width = std::bit_width(k);
  std::string bits;
  bits.reserve(static_cast<std::size_t>(width - 1));
  for (int i = width - 2; i >= 0; --i) {
    bits.push_back(((k >> i) & 1u) ? '1' : '0');
  }
  return bits;
}

}  // namespace dyngraph
