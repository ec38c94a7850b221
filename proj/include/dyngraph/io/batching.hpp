#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dyngraph/csr.hpp"
#include "dyngraph/io/loaders.hpp"
#include "dyngraph/types.hpp"

namespace dyngraph::io {

enum class EdgeOrder { Prefix, Shuffled };

namespace detail {

inline std::vector<std::pair<VertexId, VertexId>> edge_sequence(const Csr& csr) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(csr.edge_count());
  for (std::uint64_t v = 0; v < csr.vertex_count; ++v) {
    for (std::uint64_t i = csr.offsets[v]; i < csr.offsets[v + 1]; ++i) {
      edges.emplace_back(static_cast<VertexId>(v), csr.destinations[i]);
    }
  }
  return edges;
}

// Fisher-Yates with explicit draws so the permutation is identical on every
// platform for a given seed.
template <class T>
void deterministic_shuffle(std::vector<T>& items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace detail

/// Slices a loaded CSR into consecutive update batches of `batch_size`
/// edges (0 = bulk: one batch holding everything). Every batch's offsets
/// span the full vertex count, and concatenating the batches reproduces the
/// input edge sequence. `Shuffled` permutes the edge sequence first.
inline std::vector<CsrBatch> make_batches(const Csr& csr, std::uint64_t batch_size,
                                          BatchKind kind = BatchKind::Insert,
                                          EdgeOrder order = EdgeOrder::Prefix,
                                          std::uint64_t seed = 1) {
  auto edges = detail::edge_sequence(csr);
  if (order == EdgeOrder::Shuffled) detail::deterministic_shuffle(edges, seed);

  if (batch_size == 0) batch_size = edges.size();
  std::vector<CsrBatch> batches;
  if (edges.empty()) {
    batches.push_back(csr_from_pairs(kind, csr.vertex_count, {}));
    return batches;
  }
  for (std::size_t begin = 0; begin < edges.size(); begin += batch_size) {
    const std::size_t end = begin + batch_size < edges.size() ? begin + batch_size : edges.size();
    batches.push_back(csr_from_pairs(
        kind, csr.vertex_count,
        std::vector<std::pair<VertexId, VertexId>>(edges.begin() + begin, edges.begin() + end)));
  }
  return batches;
}

}  // namespace dyngraph::io
