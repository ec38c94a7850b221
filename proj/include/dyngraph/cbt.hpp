#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "dyngraph/bits.hpp"
#include "dyngraph/block_pool.hpp"
#include "dyngraph/edge_block.hpp"
#include "dyngraph/types.hpp"

namespace dyngraph {

/// Walks from the root to the block at 1-based level-order position k,
/// following the bits of k below its leading 1 (0 = left, 1 = right).
inline BlockHandle cbt_block_at(const BlockPool& pool, const EdgeSentinel& sentinel,
                                std::uint64_t position) {
  assert(position >= 1 && position <= sentinel.block_count);
  BlockHandle cur = sentinel.cbt_root;
  const int width = std::bit_width(position);
  for (int i = width - 2; i >= 0; --i) {
    const EdgeBlock& b = pool.block(cur);
    cur = ((position >> i) & 1u) ? b.right_child : b.left_child;
    assert(cur != kNullBlock);
  }
  return cur;
}

/// Links `handle` into the adjacency at level-order position `position`,
/// which must be block_count + 1 so the tree stays complete. The path to the
/// parent is the position's bit string minus its final bit; the final bit
/// selects the child side.
inline void cbt_attach(BlockPool& pool, EdgeSentinel& sentinel, BlockHandle handle,
                       std::uint64_t position) {
  if (position != static_cast<std::uint64_t>(sentinel.block_count) + 1) {
    throw EngineError("cbt_attach: position " + std::to_string(position) +
                      " would break completeness (expected " +
                      std::to_string(sentinel.block_count + 1) + ")");
  }
  if (position == 1) {
    sentinel.cbt_root = handle;
  } else {
    EdgeBlock& parent = pool.block(cbt_block_at(pool, sentinel, position >> 1));
    if ((position & 1u) == 0) {
      assert(parent.left_child == kNullBlock);
      parent.left_child = handle;
    } else {
      assert(parent.right_child == kNullBlock);
      parent.right_child = handle;
    }
  }
  ++sentinel.block_count;
}

/// Every reachable block exactly once, in in-order sequence.
inline std::vector<BlockHandle> in_order_blocks(const BlockPool& pool,
                                                const EdgeSentinel& sentinel) {
  std::vector<BlockHandle> out;
  out.reserve(sentinel.block_count);
  std::vector<BlockHandle> stack;
  BlockHandle cur = sentinel.cbt_root;
  while (cur != kNullBlock || !stack.empty()) {
    while (cur != kNullBlock) {
      stack.push_back(cur);
      cur = pool.block(cur).left_child;
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    cur = pool.block(cur).right_child;
  }
  return out;
}

/// Unlinks the block at the highest level-order position (always a leaf) and
/// returns its handle. The caller reclaims it through the pool.
inline BlockHandle cbt_detach_tail(BlockPool& pool, EdgeSentinel& sentinel) {
  assert(sentinel.block_count >= 1);
  const std::uint64_t position = sentinel.block_count;
  const BlockHandle tail = cbt_block_at(pool, sentinel, position);
  assert(!pool.block(tail).has_children());
  if (position == 1) {
    sentinel.cbt_root = kNullBlock;
  } else {
    EdgeBlock& parent = pool.block(cbt_block_at(pool, sentinel, position >> 1));
    if ((position & 1u) == 0) {
      parent.left_child = kNullBlock;
    } else {
      parent.right_child = kNullBlock;
    }
  }
  --sentinel.block_count;
  return tail;
}

}  // namespace dyngraph
