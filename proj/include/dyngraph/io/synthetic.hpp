#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dyngraph/io/loaders.hpp"
#include "dyngraph/types.hpp"

namespace dyngraph::io {

/// Uniform random directed multigraph: `edge_count` edges with independently
/// uniform endpoints. Deterministic for a given seed on every platform.
inline Csr synth_uniform(std::uint64_t vertex_count, std::uint64_t edge_count,
                         std::uint64_t seed) {
  if (vertex_count == 0) throw DataError("synthetic graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(edge_count);
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    edges.emplace_back(static_cast<VertexId>(rng() % vertex_count),
                       static_cast<VertexId>(rng() % vertex_count));
  }
  return detail::csr_from_edges(vertex_count, edges);
}

/// Skewed random multigraph: sources are drawn with probability proportional
/// to 1 / (rank + 1), so a few vertices carry most of the out-degree while
/// the tail stays sparse. Destinations are uniform.
inline Csr synth_power_law(std::uint64_t vertex_count, std::uint64_t edge_count,
                           std::uint64_t seed) {
  if (vertex_count == 0) throw DataError("synthetic graph needs at least one vertex");
  std::mt19937_64 rng(seed);

  // Inverse-CDF table of the harmonic weights.
  std::vector<double> cdf(vertex_count);
  double acc = 0.0;
  for (std::uint64_t v = 0; v < vertex_count; ++v) {
    acc += 1.0 / static_cast<double>(v + 1);
    cdf[v] = acc;
  }
  const double total = acc;

  auto draw_source = [&]() -> VertexId {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    std::uint64_t lo = 0, hi = vertex_count - 1;
    while (lo < hi) {
      const std::uint64_t mid = (lo + hi) / 2;
      if (cdf[mid] < u) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return static_cast<VertexId>(lo);
  };

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(edge_count);
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    edges.emplace_back(draw_source(), static_cast<VertexId>(rng() % vertex_count));
  }
  return detail::csr_from_edges(vertex_count, edges);
}

}  // namespace dyngraph::io
