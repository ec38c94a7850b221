#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "dyngraph/dyngraph.hpp"
#include "test_util.hpp"

using namespace dyngraph;
using dyngraph::test::state_fingerprint;

namespace {

GraphConfig small_config() {
  GraphConfig config;
  config.arena_bytes = 4 << 20;
  config.pool.initial_fraction = 0.25;
  return config;
}

CsrBatch insert_pairs(const DynamicGraph& g,
                      const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  return csr_from_pairs(BatchKind::Insert, g.logical_size(), pairs);
}

CsrBatch delete_pairs(const DynamicGraph& g,
                      const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  return csr_from_pairs(BatchKind::Delete, g.logical_size(), pairs);
}

}  // namespace

TEST(ComputeBlockSize, AverageOfNonZeroDegrees) {
  // degrees [3, 0, 5, 4] -> (3 + 5 + 4) / 3 = 4
  CsrBatch batch;
  batch.offsets = {0, 3, 3, 8, 12};
  batch.destinations.assign(12, 0);
  EXPECT_EQ(compute_block_size(batch), 4u);
}

TEST(ComputeBlockSize, SingleVertex) {
  CsrBatch batch;
  batch.offsets = {0, 7};
  batch.destinations.assign(7, 0);
  EXPECT_EQ(compute_block_size(batch), 7u);
}

TEST(ComputeBlockSize, EmptyBatchRejected) {
  CsrBatch batch;
  batch.offsets = {0, 0, 0};
  EXPECT_THROW(compute_block_size(batch), DataError);
}

TEST(ComputeBlockSize, MatchesIndependentScan) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 50; ++round) {
    const std::uint64_t n = 1 + rng() % 40;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::uint64_t v = 0; v < n; ++v) {
      const std::uint64_t degree = rng() % 9;
      for (std::uint64_t i = 0; i < degree; ++i) {
        pairs.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(rng() % n));
      }
    }
    if (pairs.empty()) continue;
    const CsrBatch batch = csr_from_pairs(BatchKind::Insert, n, pairs);

    // oracle: scan the rebuilt CSR independently
    std::uint64_t edges = 0, nonzero = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
      const std::uint64_t d = batch.offsets[v + 1] - batch.offsets[v];
      edges += d;
      if (d > 0) ++nonzero;
    }
    const auto expected =
        static_cast<std::uint32_t>(std::max<std::uint64_t>(1, (edges + nonzero / 2) / nonzero));
    EXPECT_EQ(compute_block_size(batch), expected);
  }
}

TEST(PlanBatch, CeilOfOverflowByBlockSize) {
  DynamicGraph g(small_config(), 3, 4);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < 10; ++i) pairs.emplace_back(0, 1);
  const auto plan = g.plan_batch(insert_pairs(g, pairs));
  EXPECT_EQ(plan.blocks_required[0], 3u);  // ceil(10 / 4)
  EXPECT_EQ(plan.space_remaining[0], 0u);
  EXPECT_EQ(plan.total_blocks(), 3u);
}

TEST(PlanBatch, SpaceRemainingReducesRequirement) {
  DynamicGraph g(small_config(), 3, 4);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < 6; ++i) pairs.emplace_back(0, 1);
  g.insert_batch(insert_pairs(g, pairs));  // leaves offset 2 in the second block

  std::vector<std::pair<VertexId, VertexId>> next;
  for (int i = 0; i < 10; ++i) next.emplace_back(0, 2);
  const auto plan = g.plan_batch(insert_pairs(g, next));
  EXPECT_EQ(plan.space_remaining[0], 2u);
  EXPECT_EQ(plan.blocks_required[0], 2u);  // ceil((10 - 2) / 4)
}

TEST(PlanBatch, ZeroDegreeNeedsNothing) {
  DynamicGraph g(small_config(), 4, 4);
  const auto plan = g.plan_batch(insert_pairs(g, {{2, 0}}));
  EXPECT_EQ(plan.blocks_required[0], 0u);
  EXPECT_EQ(plan.blocks_required[1], 0u);
  EXPECT_EQ(plan.blocks_required[2], 1u);
  EXPECT_EQ(plan.blocks_required[3], 0u);
}

TEST(PlanBatch, MalformedCsrRejected) {
  DynamicGraph g(small_config(), 4, 4);

  CsrBatch wrong_length;
  wrong_length.offsets = {0, 1, 1};  // graph has 4 vertices
  wrong_length.destinations = {0};
  EXPECT_THROW(g.plan_batch(wrong_length), DataError);

  CsrBatch nonmonotone;
  nonmonotone.offsets = {0, 2, 1, 2, 2};
  nonmonotone.destinations = {0, 1};
  EXPECT_THROW(g.plan_batch(nonmonotone), DataError);

  CsrBatch nonzero_start;
  nonzero_start.offsets = {1, 1, 1, 1, 1};
  nonzero_start.destinations = {0};
  EXPECT_THROW(g.plan_batch(nonzero_start), DataError);

  CsrBatch out_of_range;
  out_of_range.offsets = {0, 1, 1, 1, 1};
  out_of_range.destinations = {4};
  EXPECT_THROW(g.plan_batch(out_of_range), DataError);

  CsrBatch length_mismatch;
  length_mismatch.offsets = {0, 1, 1, 1, 2};
  length_mismatch.destinations = {0};
  EXPECT_THROW(g.plan_batch(length_mismatch), DataError);

  CsrBatch wrong_kind;
  wrong_kind.kind = BatchKind::Delete;
  wrong_kind.offsets = {0, 0, 0, 0, 0};
  EXPECT_THROW(g.plan_batch(wrong_kind), DataError);
}

TEST(InsertBatch, EmptyBatchChangesNothing) {
  DynamicGraph g(small_config(), 4, 4);
  const std::uint64_t front = g.pool().queue_front();
  const std::string before = state_fingerprint(g);
  g.insert_batch(insert_pairs(g, {}));
  EXPECT_EQ(g.pool().queue_front(), front);
  EXPECT_EQ(state_fingerprint(g), before);
}

TEST(InsertBatch, FreshVertexSixEdgesTwoBlocks) {
  DynamicGraph g(small_config(), 2, 4);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < 6; ++i) pairs.emplace_back(0, 1);
  g.insert_batch(insert_pairs(g, pairs));

  const EdgeSentinel& s = g.sentinel_of(0);
  EXPECT_EQ(s.block_count, 2u);
  EXPECT_EQ(s.active_edge_count, 6u);
  EXPECT_EQ(s.last_insert_offset, 2u);
  const BlockHandle root = s.cbt_root;
  EXPECT_EQ(g.pool().block(root).left_child, s.last_insert_block);
  EXPECT_EQ(g.pool().block(root).occupied_count, 4u);
  EXPECT_EQ(g.pool().block(s.last_insert_block).occupied_count, 2u);
}

TEST(InsertBatch, NinthBlockPlacedThroughBitString) {
  DynamicGraph g(small_config(), 2, 4);
  std::vector<std::pair<VertexId, VertexId>> first;
  for (int i = 0; i < 32; ++i) first.emplace_back(0, 1);  // exactly 8 full blocks
  g.insert_batch(insert_pairs(g, first));
  ASSERT_EQ(g.sentinel_of(0).block_count, 8u);

  g.insert_batch(insert_pairs(g, {{0, 1}}));
  const EdgeSentinel& s = g.sentinel_of(0);
  ASSERT_EQ(s.block_count, 9u);
  // bit string 001: left, left, then the right child
  const BlockHandle left = g.pool().block(s.cbt_root).left_child;
  const BlockHandle left_left = g.pool().block(left).left_child;
  const BlockHandle ninth = g.pool().block(left_left).right_child;
  EXPECT_NE(ninth, kNullBlock);
  EXPECT_EQ(ninth, s.last_insert_block);
  EXPECT_EQ(g.pool().block(ninth).occupied_count, 1u);
}

TEST(InsertBatch, ResumesAtLastInsertPosition) {
  DynamicGraph g(small_config(), 2, 4);
  g.insert_batch(insert_pairs(g, {{0, 1}, {0, 1}}));
  const BlockHandle first_block = g.sentinel_of(0).last_insert_block;
  g.insert_batch(insert_pairs(g, {{0, 1}, {0, 1}}));

  // same block, filled to the brim, no second block popped
  const EdgeSentinel& s = g.sentinel_of(0);
  EXPECT_EQ(s.block_count, 1u);
  EXPECT_EQ(s.last_insert_block, first_block);
  EXPECT_EQ(s.last_insert_offset, 4u);

  // the next edge must start a fresh block at offset 1
  g.insert_batch(insert_pairs(g, {{0, 1}}));
  EXPECT_EQ(g.sentinel_of(0).block_count, 2u);
  EXPECT_EQ(g.sentinel_of(0).last_insert_offset, 1u);
}

// Plan soundness: the batch consumes exactly the planned number of blocks.
TEST(InsertBatch, PoppedHandlesMatchThePlan) {
  DynamicGraph g(small_config(), 64, 3);
  std::mt19937_64 rng(11);
  for (int round = 0; round < 10; ++round) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 0; i < 200; ++i) {
      pairs.emplace_back(static_cast<VertexId>(rng() % 64), static_cast<VertexId>(rng() % 64));
    }
    const CsrBatch batch = insert_pairs(g, pairs);
    const auto plan = g.plan_batch(batch);
    const std::uint64_t front_before = g.pool().queue_front();
    const std::uint64_t in_use_before = g.pool().blocks_in_use();
    g.insert_batch(batch);
    EXPECT_EQ(g.pool().queue_front(), front_before + plan.total_blocks());
    EXPECT_EQ(g.pool().blocks_in_use(), in_use_before + plan.total_blocks());
  }
}

// Resumption: occupied slots are a gap-free prefix of the adjacency's slots
// in block-attachment order.
TEST(InsertBatch, OccupiedSlotsFormPrefix) {
  DynamicGraph g(small_config(), 2, 5);
  std::mt19937_64 rng(3);
  std::uint64_t total = 0;
  for (int round = 0; round < 12; ++round) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    const std::uint64_t k = 1 + rng() % 17;
    for (std::uint64_t i = 0; i < k; ++i) pairs.emplace_back(0, 1);
    g.insert_batch(insert_pairs(g, pairs));
    total += k;

    const EdgeSentinel& s = g.sentinel_of(0);
    std::uint64_t occupied = 0;
    for (std::uint64_t pos = 1; pos <= s.block_count; ++pos) {
      const EdgeBlock& b = g.pool().block(cbt_block_at(g.pool(), s, pos));
      if (pos < s.block_count) {
        EXPECT_EQ(b.occupied_count, 5u) << "non-tail block not full";
      }
      occupied += b.occupied_count;
    }
    EXPECT_EQ(occupied, total);
  }
}

TEST(InsertBatch, PoolUnderflowAbortsAtomically) {
  GraphConfig config;
  config.arena_bytes = 4096;
  config.pool.initial_fraction = 0.5;
  DynamicGraph g(config, 2, 4);  // bytes/block = 48

  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < 2000; ++i) pairs.emplace_back(0, 1);
  const std::string before = state_fingerprint(g);
  EXPECT_THROW(g.insert_batch(insert_pairs(g, pairs)), EngineError);
  EXPECT_EQ(state_fingerprint(g), before);
}

TEST(InsertBatch, RetiredSourceRejected) {
  DynamicGraph g(small_config(), 4, 4);
  const std::vector<VertexId> dead{1};
  g.delete_vertices(dead);
  EXPECT_THROW(g.insert_batch(insert_pairs(g, {{1, 0}})), DataError);
  // zero-degree entry for the dead vertex is fine
  g.insert_batch(insert_pairs(g, {{0, 1}}));
  EXPECT_EQ(g.active_edges(), 1u);
}

TEST(DeleteBatch, AbsentEdgeIsANoop) {
  DynamicGraph g(small_config(), 4, 4);
  g.insert_batch(insert_pairs(g, {{1, 2}, {1, 3}}));
  const std::string before = state_fingerprint(g);
  g.delete_batch(delete_pairs(g, {{2, 3}, {1, 0}}));
  EXPECT_EQ(g.active_edges(), 2u);
  EXPECT_EQ(g.sentinel_of(1).active_edge_count, 2u);
  EXPECT_EQ(state_fingerprint(g), before);
}

TEST(DeleteBatch, TombstonesSingleMatch) {
  DynamicGraph g(small_config(), 4, 4);
  g.insert_batch(insert_pairs(g, {{1, 2}, {1, 3}}));
  g.delete_batch(delete_pairs(g, {{1, 2}}));

  EXPECT_EQ(g.sentinel_of(1).active_edge_count, 1u);
  EXPECT_FALSE(g.query_edge(1, 2));
  EXPECT_TRUE(g.query_edge(1, 3));
  // the entry is still occupied, just tombstoned
  const BlockHandle root = g.sentinel_of(1).cbt_root;
  EXPECT_EQ(g.pool().block(root).occupied_count, 2u);
  EXPECT_EQ(g.pool().block(root).active_count, 1u);
  EXPECT_TRUE(g.pool().entries(root)[0].tombstone);
}

TEST(DeleteBatch, OneDeleteEntryRemovesAllCopies) {
  DynamicGraph g(small_config(), 4, 4);
  g.insert_batch(insert_pairs(g, {{1, 2}, {1, 2}, {1, 3}}));
  g.delete_batch(delete_pairs(g, {{1, 2}}));
  EXPECT_EQ(g.sentinel_of(1).active_edge_count, 1u);
  EXPECT_FALSE(g.query_edge(1, 2));
  EXPECT_TRUE(g.query_edge(1, 3));
}

TEST(DeleteBatch, DecrementsMatchExactly) {
  DynamicGraph g(small_config(), 8, 3);
  std::mt19937_64 rng(17);
  OracleGraph oracle(8);
  for (int round = 0; round < 20; ++round) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    const std::uint64_t k = 1 + rng() % 40;
    for (std::uint64_t i = 0; i < k; ++i) {
      pairs.emplace_back(static_cast<VertexId>(rng() % 8), static_cast<VertexId>(rng() % 8));
    }
    const bool is_delete = round % 2 == 1;
    const CsrBatch batch = is_delete ? delete_pairs(g, pairs) : insert_pairs(g, pairs);

    const std::uint64_t before = g.active_edges();
    ASSERT_EQ(before, oracle.active_edges());
    if (is_delete) {
      g.delete_batch(batch);
      oracle.apply(batch);
      // decremented by exactly the number of matched entries
      EXPECT_EQ(g.active_edges(), oracle.active_edges());
    } else {
      g.insert_batch(batch);
      oracle.apply(batch);
      EXPECT_EQ(g.active_edges(), before + k);
    }
  }
  EXPECT_TRUE(oracle_compare(oracle, g).empty());
}

TEST(DeleteBatch, ReclaimReturnsEmptyTailBlocks) {
  GraphConfig config = small_config();
  config.reclaim_on_delete = true;
  DynamicGraph g(config, 2, 2);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId d = 0; d < 2; ++d) {
    for (int i = 0; i < 3; ++i) pairs.emplace_back(0, d);
  }
  g.insert_batch(insert_pairs(g, pairs));  // 6 edges, 3 blocks
  ASSERT_EQ(g.sentinel_of(0).block_count, 3u);
  const std::uint64_t queued_before = g.pool().queue_size();

  // deleting destination 1 empties the middle and tail blocks
  g.delete_batch(delete_pairs(g, {{0, 1}}));
  const EdgeSentinel& s = g.sentinel_of(0);
  EXPECT_EQ(s.active_edge_count, 3u);
  EXPECT_EQ(s.block_count, 2u);  // the all-1 tail block came off
  EXPECT_EQ(g.pool().queue_size(), queued_before + 1);
  EXPECT_EQ(s.last_insert_offset, 2u);  // resumes after the new tail

  // deleting everything returns the rest
  g.delete_batch(delete_pairs(g, {{0, 0}}));
  EXPECT_EQ(g.sentinel_of(0).block_count, 0u);
  EXPECT_EQ(g.sentinel_of(0).cbt_root, kNullBlock);
  EXPECT_EQ(g.pool().queue_size(), queued_before + 3);
  EXPECT_EQ(g.active_edges(), 0u);

  // and the vertex accepts fresh inserts afterwards
  g.insert_batch(insert_pairs(g, {{0, 1}}));
  EXPECT_TRUE(g.query_edge(0, 1));
}

TEST(DeleteBatch, NoReclaimKeepsBlocksInPlace) {
  GraphConfig config = small_config();
  config.reclaim_on_delete = false;
  DynamicGraph g(config, 2, 2);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < 4; ++i) pairs.emplace_back(0, 1);
  g.insert_batch(insert_pairs(g, pairs));
  const std::uint64_t queued_before = g.pool().queue_size();

  g.delete_batch(delete_pairs(g, {{0, 1}}));
  EXPECT_EQ(g.sentinel_of(0).block_count, 2u);  // holes persist
  EXPECT_EQ(g.pool().queue_size(), queued_before);
  EXPECT_EQ(g.active_edges(), 0u);
}

TEST(QueryEdge, EmptyAdjacencyIsFalse) {
  DynamicGraph g(small_config(), 2, 4);
  EXPECT_FALSE(g.query_edge(0, 1));
}

TEST(QueryEdge, FindsInsertedEdgeOnly) {
  DynamicGraph g(small_config(), 4, 4);
  g.insert_batch(insert_pairs(g, {{1, 2}}));
  EXPECT_TRUE(g.query_edge(1, 2));
  EXPECT_FALSE(g.query_edge(1, 3));
  EXPECT_FALSE(g.query_edge(2, 1));
}

TEST(QueryEdge, UnknownOrDeadSourceIsFalse) {
  DynamicGraph g(small_config(), 2, 4);
  g.insert_batch(insert_pairs(g, {{1, 0}}));
  EXPECT_FALSE(g.query_edge(7, 0));  // never existed
  const std::vector<VertexId> ids{1};
  g.delete_vertices(ids);
  EXPECT_FALSE(g.query_edge(1, 0));
}

TEST(QueryEdge, RandomQueriesMatchOracle) {
  DynamicGraph g(small_config(), 32, 3);
  OracleGraph oracle(32);
  std::mt19937_64 rng(23);
  for (int round = 0; round < 16; ++round) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 0; i < 60; ++i) {
      pairs.emplace_back(static_cast<VertexId>(rng() % 32), static_cast<VertexId>(rng() % 32));
    }
    const bool is_delete = round % 3 == 2;
    const CsrBatch batch = is_delete ? delete_pairs(g, pairs) : insert_pairs(g, pairs);
    if (is_delete) {
      g.delete_batch(batch);
    } else {
      g.insert_batch(batch);
    }
    oracle.apply(batch);
  }
  for (int i = 0; i < 10000; ++i) {
    const auto src = static_cast<VertexId>(rng() % 32);
    const auto dst = static_cast<VertexId>(rng() % 32);
    EXPECT_EQ(g.query_edge(src, dst), oracle.has_edge(src, dst)) << src << "->" << dst;
  }
}

TEST(InsertVertices, FillsCapacityWithoutGrowth) {
  DynamicGraph g(small_config(), 453, 4);
  EXPECT_EQ(g.vertex_capacity(), 512u);
  g.insert_vertices(59);
  EXPECT_EQ(g.logical_size(), 512u);
  EXPECT_EQ(g.vertex_capacity(), 512u);
}

TEST(InsertVertices, DoublingAtTheBoundary) {
  DynamicGraph g(small_config(), 512, 4);
  g.insert_vertices(1);
  EXPECT_EQ(g.logical_size(), 513u);
  EXPECT_EQ(g.vertex_capacity(), 1024u);
}

TEST(InsertVertices, ZeroIsANoop) {
  DynamicGraph g(small_config(), 10, 4);
  const std::uint32_t reservations = g.arena().reservation_count();
  g.insert_vertices(0);
  EXPECT_EQ(g.logical_size(), 10u);
  EXPECT_EQ(g.arena().reservation_count(), reservations);
}

TEST(InsertVertices, ArenaTooSmallForDoubling) {
  GraphConfig config;
  config.arena_bytes = 70000;
  config.pool.initial_fraction = 0.5;
  DynamicGraph g(config, 1024, 4);  // dict + sentinels = 36 KiB
  EXPECT_THROW(g.insert_vertices(1025), EngineError);
  EXPECT_EQ(g.logical_size(), 1024u);
  EXPECT_EQ(g.vertex_capacity(), 1024u);
}

TEST(DeleteVertices, QueriesGoDark) {
  DynamicGraph g(small_config(), 4, 4);
  g.insert_batch(insert_pairs(g, {{1, 2}, {1, 3}}));
  const std::vector<VertexId> ids{1};
  EXPECT_TRUE(g.delete_vertices(ids).empty());
  EXPECT_FALSE(g.query_edge(1, 2));
  EXPECT_EQ(g.active_edges(), 0u);
  EXPECT_EQ(g.alive_vertices(), 3u);
}

TEST(DeleteVertices, CapacityNeverShrinks) {
  DynamicGraph g(small_config(), 100, 4);
  std::vector<VertexId> all;
  for (VertexId v = 0; v < 100; ++v) all.push_back(v);
  g.delete_vertices(all);
  EXPECT_EQ(g.alive_vertices(), 0u);
  EXPECT_EQ(g.vertex_capacity(), 128u);
  EXPECT_EQ(g.logical_size(), 100u);
}

TEST(DeleteVertices, UnknownOrDeadIdsAreSkipped) {
  DynamicGraph g(small_config(), 4, 4);
  const std::vector<VertexId> ids{2, 9, 2};
  const auto skipped = g.delete_vertices(ids);
  ASSERT_EQ(skipped.size(), 2u);
  EXPECT_EQ(skipped[0], 9u);  // out of range
  EXPECT_EQ(skipped[1], 2u);  // already dead
}

TEST(DeleteVertices, RetiredIdStaysDeadAndNewIdsStartFresh) {
  DynamicGraph g(small_config(), 2, 4);
  g.insert_batch(insert_pairs(g, {{1, 0}}));
  const std::vector<VertexId> ids{1};
  g.delete_vertices(ids);

  g.insert_vertices(1);
  const VertexId fresh = 2;
  EXPECT_TRUE(g.vertex_alive(fresh));
  EXPECT_FALSE(g.vertex_alive(1));
  EXPECT_EQ(g.sentinel_of(fresh).block_count, 0u);
  EXPECT_EQ(g.sentinel_of(fresh).active_edge_count, 0u);
  g.insert_batch(insert_pairs(g, {{fresh, 0}}));
  EXPECT_TRUE(g.query_edge(fresh, 0));
  EXPECT_FALSE(g.query_edge(1, 0));
}

// Determinism: the final structure is bit-identical for any worker count.
TEST(Determinism, WorkerCountDoesNotChangeState) {
  std::vector<std::string> fingerprints;
  for (std::uint32_t workers : {1u, 2u, 5u}) {
    GraphConfig config = small_config();
    config.workers = workers;
    DynamicGraph g(config, 128, 3);
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 12; ++round) {
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (int i = 0; i < 300; ++i) {
        pairs.emplace_back(static_cast<VertexId>(rng() % 128),
                           static_cast<VertexId>(rng() % 128));
      }
      if (round % 3 == 2) {
        g.delete_batch(delete_pairs(g, pairs));
      } else {
        g.insert_batch(insert_pairs(g, pairs));
      }
    }
    fingerprints.push_back(state_fingerprint(g));
  }
  EXPECT_EQ(fingerprints[0], fingerprints[1]);
  EXPECT_EQ(fingerprints[0], fingerprints[2]);
}

TEST(Stats, CountsAndHoleRatio) {
  DynamicGraph g(small_config(), 4, 4);
  g.insert_batch(insert_pairs(g, {{0, 1}, {0, 2}, {1, 3}, {1, 0}}));
  g.delete_batch(delete_pairs(g, {{0, 1}}));

  const GraphStats st = g.stats();
  EXPECT_EQ(st.alive_vertices, 4u);
  EXPECT_EQ(st.active_edges, 3u);
  EXPECT_EQ(st.adjacency_blocks, 2u);
  EXPECT_EQ(st.occupied_slots, 4u);
  EXPECT_EQ(st.hole_slots, 1u);
  EXPECT_DOUBLE_EQ(st.hole_ratio, 0.25);
  EXPECT_EQ(st.arena_reservations, 3u);
  EXPECT_EQ(st.cbt_height_histogram.at(1), 2u);
}
