#pragma once

#include <cstdint>
#include <vector>

#include "dyngraph/arena.hpp"
#include "dyngraph/bits.hpp"
#include "dyngraph/edge_block.hpp"
#include "dyngraph/types.hpp"

namespace dyngraph {

struct VertexSlot {
  VertexId vertex_id = kInvalidVertex;
  bool alive = false;
  std::uint32_t sentinel = 0;  // index into the sentinel array
};

static_assert(sizeof(VertexSlot) == 12, "memory accounting assumes 12-byte vertex slots");

/// Contiguous vertex dictionary plus the parallel edge-sentinel array.
/// Capacity is always the smallest power of two covering the largest logical
/// size ever reached; ids are dense and never reused, so slot i owns sentinel
/// i for the lifetime of the structure. Deleting a vertex only clears its
/// alive flag; the dictionary never shrinks.
class VertexDictionary {
 public:
  /// Performs the two launch reservations: one for the slot array, one for
  /// the sentinel array, both sized to the initial capacity.
  VertexDictionary(Arena& arena, std::uint64_t initial_count)
      : capacity_(closest_pow2(initial_count == 0 ? 1 : initial_count)) {
    arena.reserve(capacity_ * sizeof(VertexSlot));
    arena.reserve(capacity_ * sizeof(EdgeSentinel));
    slots_.reserve(capacity_);
    sentinels_.reserve(capacity_);
    append_slots(initial_count);
  }

  std::uint64_t capacity() const { return capacity_; }
  std::uint64_t logical_size() const { return slots_.size(); }

  const VertexSlot& slot(VertexId v) const { return slots_[v]; }
  bool alive(VertexId v) const { return v < slots_.size() && slots_[v].alive; }

  EdgeSentinel& sentinel(VertexId v) { return sentinels_[slots_[v].sentinel]; }
  const EdgeSentinel& sentinel(VertexId v) const { return sentinels_[slots_[v].sentinel]; }

  std::uint64_t alive_count() const { return alive_count_; }

  /// Appends `count` fresh vertices, doubling the capacity as needed. A
  /// migration reserves the new slot and sentinel arrays, copies, and
  /// releases the old storage; the graph is unchanged if the arena refuses.
  void append(Arena& arena, std::uint64_t count) {
    if (count == 0) return;
    const std::uint64_t target = closest_pow2(slots_.size() + count);
    if (target > capacity_) {
      const std::uint64_t new_bytes = target * (sizeof(VertexSlot) + sizeof(EdgeSentinel));
      if (!arena.can_reserve(new_bytes)) {
        throw EngineError("vertex dictionary: arena cannot host capacity " +
                          std::to_string(target));
      }
      arena.reserve(target * sizeof(VertexSlot));
      arena.reserve(target * sizeof(EdgeSentinel));
      arena.release(capacity_ * sizeof(VertexSlot));
      arena.release(capacity_ * sizeof(EdgeSentinel));
      capacity_ = target;
      slots_.reserve(capacity_);
      sentinels_.reserve(capacity_);
    }
    append_slots(count);
  }

  /// Marks a vertex dead. Its sentinel stays allocated; the dictionary does
  /// not reclaim memory on vertex deletes.
  void retire(VertexId v) {
    slots_[v].alive = false;
    --alive_count_;
  }

  std::uint64_t dictionary_bytes() const { return capacity_ * sizeof(VertexSlot); }
  std::uint64_t sentinel_bytes() const { return capacity_ * sizeof(EdgeSentinel); }

 private:
  void append_slots(std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto id = static_cast<VertexId>(slots_.size());
      slots_.push_back(VertexSlot{id, true, id});
      sentinels_.emplace_back();
    }
    alive_count_ += count;
  }

  std::vector<VertexSlot> slots_;
  std::vector<EdgeSentinel> sentinels_;
  std::uint64_t capacity_;
  std::uint64_t alive_count_ = 0;
};

}  // namespace dyngraph
