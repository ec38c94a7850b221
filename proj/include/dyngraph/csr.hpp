#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dyngraph/types.hpp"

namespace dyngraph {

enum class BatchKind { Insert, Delete };

/// One update batch in compressed sparse row form. `offsets` spans the full
/// vertex count of the graph at batch time (length = vertex count + 1), even
/// when most vertices are untouched.
struct CsrBatch {
  BatchKind kind = BatchKind::Insert;
  std::vector<std::uint64_t> offsets;
  std::vector<VertexId> destinations;

  std::uint64_t vertex_count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::uint64_t edge_count() const { return destinations.size(); }
  std::uint64_t degree(VertexId v) const { return offsets[v + 1] - offsets[v]; }
};

/// Builds a CSR batch from (source, destination) pairs with a stable
/// counting sort: within one source, destinations keep their input order.
inline CsrBatch csr_from_pairs(BatchKind kind, std::uint64_t vertex_count,
                               const std::vector<std::pair<VertexId, VertexId>>& edges) {
  CsrBatch batch;
  batch.kind = kind;
  batch.offsets.assign(vertex_count + 1, 0);
  for (const auto& [src, dst] : edges) {
    (void)dst;
    ++batch.offsets[src + 1];
  }
  for (std::uint64_t v = 0; v < vertex_count; ++v) batch.offsets[v + 1] += batch.offsets[v];
  batch.destinations.resize(edges.size());
  std::vector<std::uint64_t> cursor(batch.offsets.begin(), batch.offsets.end() - 1);
  for (const auto& [src, dst] : edges) {
    batch.destinations[cursor[src]++] = dst;
  }
  return batch;
}

/// Structural validation shared by the engine and the oracle. `vertex_count`
/// is the graph's logical size at batch time.
inline void validate_batch(const CsrBatch& batch, std::uint64_t vertex_count) {
  if (batch.offsets.size() != vertex_count + 1) {
    throw DataError("csr batch: offsets length " + std::to_string(batch.offsets.size()) +
                    " does not match vertex count " + std::to_string(vertex_count) + " + 1");
  }
  if (batch.offsets.front() != 0) {
    throw DataError("csr batch: offsets[0] must be 0");
  }
  for (std::size_t i = 1; i < batch.offsets.size(); ++i) {
    if (batch.offsets[i] < batch.offsets[i - 1]) {
      throw DataError("csr batch: offsets are not monotone at index " + std::to_string(i));
    }
  }
  if (batch.offsets.back() != batch.destinations.size()) {
    throw DataError("csr batch: destinations length " + std::to_string(batch.destinations.size()) +
                    " does not match offsets[" + std::to_string(vertex_count) + "] = " +
                    std::to_string(batch.offsets.back()));
  }
  for (std::size_t i = 0; i < batch.destinations.size(); ++i) {
    if (batch.destinations[i] >= vertex_count) {
      throw DataError("csr batch: destination " + std::to_string(batch.destinations[i]) +
                      " at index " + std::to_string(i) + " is out of range");
    }
  }
}

/// Edge-block size rule: the average degree of the vertices with non-zero
/// degree in the first batch, rounded half up, never below 1.
inline std::uint32_t compute_block_size(const CsrBatch& first_batch) {
  std::uint64_t nonzero = 0;
  for (std::uint64_t v = 0; v < first_batch.vertex_count(); ++v) {
    if (first_batch.degree(static_cast<VertexId>(v)) > 0) ++nonzero;
  }
  if (nonzero == 0) {
    throw DataError("compute_block_size: first batch contains no edges");
  }
  const std::uint64_t total = first_batch.edge_count();
  const std::uint64_t rounded = (total + nonzero / 2) / nonzero;
  return static_cast<std::uint32_t>(rounded == 0 ? 1 : rounded);
}

}  // namespace dyngraph
