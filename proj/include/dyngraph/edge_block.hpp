#pragma once

#include <cstdint>

#include "dyngraph/types.hpp"

namespace dyngraph {

/// One stored edge. A tombstoned entry is a hole: it never matches a query
/// and is never compacted away.
struct EdgeEntry {
  VertexId destination = kInvalidVertex;
  bool tombstone = false;
};

static_assert(sizeof(EdgeEntry) == 8, "memory accounting assumes 8-byte edge entries");

/// Per-block metadata. The B entries of a block live in the pool's slab at
/// [handle * B, (handle + 1) * B); occupied slots are always a prefix of the
/// block, so `occupied_count` doubles as the next free slot index.
struct EdgeBlock {
  std::uint32_t active_count = 0;    // non-tombstoned entries
  std::uint32_t occupied_count = 0;  // slots ever written, tombstoned or not
  BlockHandle left_child = kNullBlock;
  BlockHandle right_child = kNullBlock;

  bool has_children() const { return left_child != kNullBlock || right_child != kNullBlock; }
};

static_assert(sizeof(EdgeBlock) == 16, "memory accounting assumes 16-byte block headers");

/// Per-vertex adjacency metadata: edge count, root of the complete binary
/// tree of edge blocks, and the position where the latest insertion stopped.
struct EdgeSentinel {
  std::uint64_t active_edge_count = 0;
  std::uint32_t block_count = 0;
  BlockHandle cbt_root = kNullBlock;
  BlockHandle last_insert_block = kNullBlock;
  std::uint32_t last_insert_offset = 0;  // in [0, B]; B means the block is full
};

static_assert(sizeof(EdgeSentinel) == 24, "memory accounting assumes 24-byte sentinels");

}  // namespace dyngraph
