#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dyngraph/arena.hpp"
#include "dyngraph/edge_block.hpp"
#include "dyngraph/types.hpp"

namespace dyngraph {

/// Growth policy of the free-block queue: how much of the arena is reserved
/// at launch, when the queue is considered nearly exhausted, and how much it
/// grows per refill.
struct GrowthPolicy {
  double initial_fraction = 0.5;
  double trigger_fraction = 0.8;
  double growth_fraction = 0.25;

  void validate() const {
    auto in_range = [](double f) { return f > 0.0 && f <= 1.0; };
    if (!in_range(initial_fraction) || !in_range(trigger_fraction) || !in_range(growth_fraction)) {
      throw DataError("growth policy: all fractions must be in (0, 1]");
    }
  }
};

/// Ring of free edge-block handles. Positions are unwrapped 64-bit
/// coordinates: `front` is the next position to serve, `rear` is one past
/// the last pushed handle, and a handle at position p lives in the ring
/// slot p % ring capacity.
class EdgeQueue {
 public:
  std::uint64_t front() const { return front_; }
  std::uint64_t rear() const { return rear_; }
  std::uint64_t size() const { return rear_ - front_; }

  /// Handles ever made available: every push counts, including re-pushes of
  /// reclaimed handles.
  std::uint64_t total_capacity() const { return total_capacity_; }

  BlockHandle at(std::uint64_t position) const {
    assert(position >= front_ && position < rear_);
    return ring_[position % ring_.size()];
  }

  void reserve_ring(std::uint64_t slots) {
    if (slots > ring_.size()) regrow(slots);
  }

  void push(BlockHandle handle) {
    if (rear_ - front_ == ring_.size()) regrow(ring_.empty() ? 16 : ring_.size() * 2);
    ring_[rear_ % ring_.size()] = handle;
    ++rear_;
    ++total_capacity_;
  }

  void advance_front(std::uint64_t count) {
    if (count > size()) {
      throw EngineError("edge queue: advancing front past rear");
    }
    front_ += count;
  }

  /// Host bookkeeping footprint of the ring itself.
  std::uint64_t ring_bytes() const { return ring_.size() * sizeof(BlockHandle); }

 private:
  void regrow(std::uint64_t new_slots) {
    std::vector<BlockHandle> next(new_slots);
    for (std::uint64_t p = front_; p < rear_; ++p) {
      next[p % new_slots] = ring_[p % ring_.size()];
    }
    ring_ = std::move(next);
  }

  std::vector<BlockHandle> ring_;
  std::uint64_t front_ = 0;
  std::uint64_t rear_ = 0;
  std::uint64_t total_capacity_ = 0;
};

/// Pre-allocated edge-block pool. One arena reservation at launch carves out
/// `initial_fraction` of the budget and pushes one handle per block onto the
/// free queue; batches pop disjoint ranges of queue positions computed from
/// a prefix sum, commit the front pointer once per batch, and return emptied
/// blocks for reuse. Crossing `trigger_fraction` of cumulative consumption
/// grows the pool by `growth_fraction`, or by as many blocks as the arena
/// still allows.
///
/// Block storage is materialized lazily on the host: `materialize()` must
/// cover a handle before `block()`/`entries()` touch it. The engine calls it
/// once per batch, in the sequential planning phase.
class BlockPool {
 public:
  BlockPool(Arena& arena, GrowthPolicy policy, std::uint32_t block_size)
      : arena_(&arena), policy_(policy), block_size_(block_size) {
    policy_.validate();
    if (block_size_ == 0) {
      throw DataError("block pool: block size must be >= 1");
    }
    std::uint64_t request =
        static_cast<std::uint64_t>(static_cast<double>(arena.capacity_bytes()) * policy_.initial_fraction);
    if (request > arena.available_bytes()) request = arena.available_bytes();
    if (request / bytes_per_block() == 0) {
      throw EngineError("block pool: arena cannot host a single edge block");
    }
    arena_->reserve(request);
    reserved_bytes_ = request;
    const std::uint64_t count = request / bytes_per_block();
    queue_.reserve_ring(count);
    push_new_blocks(count);
  }

  BlockPool(const BlockPool&) = delete;
  BlockPool& operator=(const BlockPool&) = delete;

  std::uint32_t block_size() const { return block_size_; }

  /// Device-side footprint of one block: B entries plus the block header.
  std::uint64_t bytes_per_block() const {
    return static_cast<std::uint64_t>(block_size_) * sizeof(EdgeEntry) + sizeof(EdgeBlock);
  }

  const EdgeQueue& queue() const { return queue_; }
  std::uint64_t queue_front() const { return queue_.front(); }
  std::uint64_t queue_rear() const { return queue_.rear(); }
  std::uint64_t queue_size() const { return queue_.size(); }
  std::uint64_t total_capacity() const { return queue_.total_capacity(); }
  std::uint64_t consumed() const { return consumed_; }
  std::uint64_t blocks_created() const { return created_; }
  std::uint64_t blocks_in_use() const { return created_ - queue_.size(); }
  std::uint32_t growth_count() const { return growth_count_; }

  /// Bytes reserved from the arena for block storage (launch + growths).
  std::uint64_t reserved_bytes() const { return reserved_bytes_; }
  /// Consumption metric: blocks currently held by adjacencies.
  std::uint64_t in_use_bytes() const { return blocks_in_use() * bytes_per_block(); }
  std::uint64_t ring_bytes() const { return queue_.ring_bytes(); }

  /// Reads `count` handles at queue positions [start, start + count) without
  /// advancing the shared front. `start` is an absolute queue coordinate,
  /// i.e. front plus this worker's prefix-sum offset. Safe for concurrent
  /// callers with disjoint ranges.
  std::vector<BlockHandle> pop_range(std::uint64_t start, std::uint64_t count) const {
    if (start < queue_.front() || start + count > queue_.rear()) {
      throw EngineError("block pool: pop range [" + std::to_string(start) + ", " +
                        std::to_string(start + count) + ") exceeds queue window [" +
                        std::to_string(queue_.front()) + ", " + std::to_string(queue_.rear()) + ")");
    }
    std::vector<BlockHandle> handles;
    handles.reserve(count);
    for (std::uint64_t p = start; p < count + start; ++p) handles.push_back(queue_.at(p));
    return handles;
  }

  /// Advances the front once per batch by the batch's total block count,
  /// then attempts a growth if cumulative consumption crossed the trigger.
  void commit_front(std::uint64_t total_popped) {
    queue_.advance_front(total_popped);
    consumed_ += total_popped;
    if (occupancy() >= policy_.trigger_fraction) try_grow();
  }

  /// Fraction of all handles ever made available that have been consumed.
  double occupancy() const {
    const std::uint64_t total = queue_.total_capacity();
    return total == 0 ? 0.0 : static_cast<double>(consumed_) / static_cast<double>(total);
  }

  /// Guarantees at least `blocks` handles are poppable, growing the pool as
  /// needed. Throws EngineError without touching any state when the arena
  /// cannot cover the shortfall even with every remaining byte.
  void ensure_available(std::uint64_t blocks) {
    if (queue_.size() >= blocks) return;
    const std::uint64_t shortfall = blocks - queue_.size();
    if (arena_->available_bytes() / bytes_per_block() < shortfall) {
      throw EngineError("block pool: batch needs " + std::to_string(shortfall) +
                        " more blocks than the arena can still provide");
    }
    while (queue_.size() < blocks) {
      if (!try_grow()) {
        throw EngineError("block pool: growth stalled before satisfying demand");
      }
    }
  }

  /// Returns emptied, detached blocks to the queue for future reuse.
  void reclaim(std::span<const BlockHandle> handles) {
    for (BlockHandle h : handles) {
      if (h >= headers_.size()) {
        throw EngineError("block pool: reclaimed handle was never in use");
      }
      EdgeBlock& b = headers_[h];
      if (b.active_count != 0) {
        throw EngineError("block pool: refusing to reclaim a block with active entries");
      }
      if (b.has_children()) {
        throw EngineError("block pool: refusing to reclaim a block with children");
      }
      b.occupied_count = 0;
      b.left_child = kNullBlock;
      b.right_child = kNullBlock;
      queue_.push(h);
    }
  }

  /// Materializes host storage for all handles below `handle_end`. Must be
  /// called from a sequential phase; `block()` and `entries()` only touch
  /// materialized handles.
  void materialize(std::uint64_t handle_end) {
    if (handle_end > created_) handle_end = created_;
    if (handle_end <= headers_.size()) return;
    headers_.resize(handle_end);
    slab_.resize(handle_end * block_size_);
  }

  std::uint64_t materialized() const { return headers_.size(); }

  EdgeBlock& block(BlockHandle h) {
    assert(h < headers_.size());
    return headers_[h];
  }
  const EdgeBlock& block(BlockHandle h) const {
    assert(h < headers_.size());
    return headers_[h];
  }

  std::span<EdgeEntry> entries(BlockHandle h) {
    assert(h < headers_.size());
    return {slab_.data() + static_cast<std::size_t>(h) * block_size_, block_size_};
  }
  std::span<const EdgeEntry> entries(BlockHandle h) const {
    assert(h < headers_.size());
    return {slab_.data() + static_cast<std::size_t>(h) * block_size_, block_size_};
  }

 private:
  void push_new_blocks(std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) {
      queue_.push(static_cast<BlockHandle>(created_ + i));
    }
    created_ += count;
  }

  /// One growth round: reserve and push growth_fraction * total_capacity
  /// blocks, clamped to what the arena still holds. Returns false when the
  /// arena is exhausted.
  bool try_grow() {
    std::uint64_t want = static_cast<std::uint64_t>(
        static_cast<double>(queue_.total_capacity()) * policy_.growth_fraction);
    if (want == 0) want = 1;
    const std::uint64_t affordable = arena_->available_bytes() / bytes_per_block();
    const std::uint64_t grant = want < affordable ? want : affordable;
    if (grant == 0) return false;
    arena_->reserve(grant * bytes_per_block());
    reserved_bytes_ += grant * bytes_per_block();
    push_new_blocks(grant);
    ++growth_count_;
    return true;
  }

  Arena* arena_;
  GrowthPolicy policy_;
  std::uint32_t block_size_;
  EdgeQueue queue_;
  std::vector<EdgeBlock> headers_;  // materialized prefix of created blocks
  std::vector<EdgeEntry> slab_;     // headers_.size() * block_size_ entries
  std::uint64_t created_ = 0;
  std::uint64_t consumed_ = 0;
  std::uint64_t reserved_bytes_ = 0;
  std::uint32_t growth_count_ = 0;
};

}  // namespace dyngraph
