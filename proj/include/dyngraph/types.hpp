#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dyngraph {

/// Dense, zero-based vertex identifier. Retired ids are never reused.
using VertexId = std::uint32_t;

/// Stable index of an edge block inside the pool's block storage.
using BlockHandle = std::uint32_t;

inline constexpr VertexId kInvalidVertex = std::numeric_limits<VertexId>::max();
inline constexpr BlockHandle kNullBlock = std::numeric_limits<BlockHandle>::max();

/// Base class for all library errors.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable files, invalid CSR batches, bad ids.
class DataError : public Error {
  using Error::Error;
};

/// Resource exhaustion or a violated structural contract inside the engine.
class EngineError : public Error {
  using Error::Error;
};

}  // namespace dyngraph
