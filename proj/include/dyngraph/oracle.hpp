#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dyngraph/csr.hpp"
#include "dyngraph/graph.hpp"
#include "dyngraph/types.hpp"

namespace dyngraph {

/// Brute-force reference model: a multiset of destinations per vertex plus a
/// retired-id set. Mirrors the engine's semantics exactly — duplicates are
/// stored as distinct entries, and one delete entry removes every equal copy.
class OracleGraph {
 public:
  explicit OracleGraph(std::uint64_t initial_vertex_count = 0)
      : logical_size_(initial_vertex_count) {}

  std::uint64_t logical_size() const { return logical_size_; }
  bool alive(VertexId v) const { return v < logical_size_ && !retired_.contains(v); }

  std::uint64_t active_edges() const {
    std::uint64_t total = 0;
    for (const auto& [v, multiset] : adjacency_) {
      (void)v;
      for (const auto& [dst, count] : multiset) {
        (void)dst;
        total += count;
      }
    }
    return total;
  }

  /// Destination -> multiplicity for one vertex; empty map when none.
  const std::unordered_map<VertexId, std::uint64_t>& destinations(VertexId v) const {
    static const std::unordered_map<VertexId, std::uint64_t> empty;
    const auto it = adjacency_.find(v);
    return it == adjacency_.end() ? empty : it->second;
  }

  bool has_edge(VertexId src, VertexId dst) const {
    if (!alive(src)) return false;
    const auto it = adjacency_.find(src);
    return it != adjacency_.end() && it->second.contains(dst);
  }

  /// Applies one batch with the same validation as the engine.
  void apply(const CsrBatch& batch) {
    validate_batch(batch, logical_size_);
    if (batch.kind == BatchKind::Insert) {
      for (std::uint64_t v = 0; v < batch.vertex_count(); ++v) {
        if (batch.degree(static_cast<VertexId>(v)) > 0 && !alive(static_cast<VertexId>(v))) {
          throw DataError("csr batch: insert lists edges for retired vertex " + std::to_string(v));
        }
      }
      for (std::uint64_t v = 0; v < batch.vertex_count(); ++v) {
        for (std::uint64_t i = batch.offsets[v]; i < batch.offsets[v + 1]; ++i) {
          ++adjacency_[static_cast<VertexId>(v)][batch.destinations[i]];
        }
      }
    } else {
      for (std::uint64_t v = 0; v < batch.vertex_count(); ++v) {
        const auto it = adjacency_.find(static_cast<VertexId>(v));
        if (it == adjacency_.end() || !alive(static_cast<VertexId>(v))) continue;
        for (std::uint64_t i = batch.offsets[v]; i < batch.offsets[v + 1]; ++i) {
          it->second.erase(batch.destinations[i]);  // all copies
        }
      }
    }
  }

  void insert_vertices(std::uint64_t count) { logical_size_ += count; }

  void delete_vertices(std::span<const VertexId> ids) {
    for (VertexId v : ids) {
      if (!alive(v)) continue;
      retired_.insert(v);
      adjacency_.erase(v);
    }
  }

 private:
  std::unordered_map<VertexId, std::unordered_map<VertexId, std::uint64_t>> adjacency_;
  std::unordered_set<VertexId> retired_;
  std::uint64_t logical_size_ = 0;
};

/// Compares a graph against the oracle it was built alongside: vertex
/// liveness, the active multiset of every alive vertex, query answers on
/// every oracle edge, and a seeded random sample of arbitrary pairs. Returns
/// one line per mismatch; empty means equivalent.
inline std::vector<std::string> oracle_compare(const OracleGraph& oracle, const DynamicGraph& graph,
                                               std::uint64_t seed = 1,
                                               std::uint64_t random_samples = 256,
                                               std::size_t max_reports = 32) {
  std::vector<std::string> mismatches;
  auto report = [&](std::string line) {
    if (mismatches.size() < max_reports) mismatches.push_back(std::move(line));
  };

  if (oracle.logical_size() != graph.logical_size()) {
    report("logical size: oracle " + std::to_string(oracle.logical_size()) + ", graph " +
           std::to_string(graph.logical_size()));
    return mismatches;
  }

  const auto n = static_cast<VertexId>(graph.logical_size());
  for (VertexId v = 0; v < n; ++v) {
    if (oracle.alive(v) != graph.vertex_alive(v)) {
      report("vertex " + std::to_string(v) + ": oracle alive=" +
             std::to_string(oracle.alive(v)) + ", graph alive=" +
             std::to_string(graph.vertex_alive(v)));
      continue;
    }
    if (!oracle.alive(v)) continue;

    std::unordered_map<VertexId, std::uint64_t> got;
    for (VertexId dst : graph.active_destinations(v)) ++got[dst];
    const auto& want = oracle.destinations(v);
    if (got != want) {
      std::uint64_t want_total = 0;
      for (const auto& [dst, c] : want) {
        (void)dst;
        want_total += c;
      }
      std::uint64_t got_total = 0;
      for (const auto& [dst, c] : got) {
        (void)dst;
        got_total += c;
      }
      report("vertex " + std::to_string(v) + ": active multiset differs (oracle " +
             std::to_string(want_total) + " edges, graph " + std::to_string(got_total) + ")");
    }
    for (const auto& [dst, count] : want) {
      (void)count;
      if (!graph.query_edge(v, dst)) {
        report("query (" + std::to_string(v) + ", " + std::to_string(dst) +
               "): oracle true, graph false");
      }
    }
  }

  if (n > 0) {
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < random_samples; ++i) {
      const auto src = static_cast<VertexId>(rng() % n);
      const auto dst = static_cast<VertexId>(rng() % n);
      const bool want = oracle.has_edge(src, dst);
      const bool got = graph.query_edge(src, dst);
      if (want != got) {
        report("query (" + std::to_string(src) + ", " + std::to_string(dst) + "): oracle " +
               std::to_string(want) + ", graph " + std::to_string(got));
      }
    }
  }
  return mismatches;
}

}  // namespace dyngraph
