#pragma once

#include <cstdint>
#include <string>

#include "dyngraph/types.hpp"

namespace dyngraph {

/// Simulated device-memory budget. Tracks reservations as pure accounting;
/// the host-side containers that stand in for device storage are owned by
/// the structures that made the reservation.
class Arena {
 public:
  explicit Arena(std::uint64_t capacity_bytes) : capacity_bytes_(capacity_bytes) {}

  std::uint64_t capacity_bytes() const { return capacity_bytes_; }
  std::uint64_t reserved_bytes() const { return reserved_bytes_; }
  std::uint64_t available_bytes() const { return capacity_bytes_ - reserved_bytes_; }
  std::uint32_t reservation_count() const { return reservation_count_; }

  bool can_reserve(std::uint64_t bytes) const { return bytes <= available_bytes(); }

  /// Claims `bytes` as one reservation. Throws EngineError when the budget
  /// cannot host it.
  void reserve(std::uint64_t bytes) {
    if (!can_reserve(bytes)) {
      throw EngineError("arena: reservation of " + std::to_string(bytes) +
                        " bytes exceeds remaining budget of " +
                        std::to_string(available_bytes()) + " bytes");
    }
    reserved_bytes_ += bytes;
    ++reservation_count_;
  }

  /// Returns previously reserved bytes to the budget. The reservation count
  /// never decreases.
  void release(std::uint64_t bytes) {
    if (bytes > reserved_bytes_) {
      throw EngineError("arena: releasing more bytes than are reserved");
    }
    reserved_bytes_ -= bytes;
  }

 private:
  std::uint64_t capacity_bytes_ = 0;
  std::uint64_t reserved_bytes_ = 0;
  std::uint32_t reservation_count_ = 0;
};

}  // namespace dyngraph
