#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyngraph/csr.hpp"
#include "dyngraph/types.hpp"

namespace dyngraph::io {

/// A fully loaded graph in CSR form.
struct Csr {
  std::uint64_t vertex_count = 0;
  std::vector<std::uint64_t> offsets;
  std::vector<VertexId> destinations;

  std::uint64_t edge_count() const { return destinations.size(); }
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline std::uint64_t parse_id(std::string_view token, std::size_t line_no, const std::string& what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw DataError("line " + std::to_string(line_no) + ": " + what + " '" +
                    std::string(token) + "' is not a non-negative integer");
  }
  return value;
}

inline Csr csr_from_edges(std::uint64_t vertex_count,
                          const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Csr csr;
  csr.vertex_count = vertex_count;
  csr.offsets.assign(vertex_count + 1, 0);
  for (const auto& [src, dst] : edges) {
    (void)dst;
    ++csr.offsets[src + 1];
  }
  for (std::uint64_t v = 0; v < vertex_count; ++v) csr.offsets[v + 1] += csr.offsets[v];
  csr.destinations.resize(edges.size());
  std::vector<std::uint64_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
  for (const auto& [src, dst] : edges) csr.destinations[cursor[src]++] = dst;
  return csr;
}

}  // namespace detail

/// Matrix Market coordinate loader. Ids are 1-based in the file and
/// normalized to dense 0-based. With `symmetrize`, every off-diagonal entry
/// also contributes its reverse edge.
inline Csr load_matrix_market(const std::string& path, bool symmetrize = false) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");

  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw DataError(path + ": empty file");
  ++line_no;
  {
    const auto header = detail::split_ws(line);
    if (header.size() < 4 || header[0] != "%%MatrixMarket" || header[1] != "matrix") {
      throw DataError("line 1: expected a '%%MatrixMarket matrix' header");
    }
    if (header[2] != "coordinate") {
      throw DataError("line 1: only the coordinate format is supported");
    }
  }

  std::uint64_t rows = 0, cols = 0, declared = 0;
  bool have_size = false;
  std::vector<std::pair<VertexId, VertexId>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '%') continue;
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    if (!have_size) {
      if (tokens.size() < 3) {
        throw DataError("line " + std::to_string(line_no) + ": expected 'rows cols entries'");
      }
      rows = detail::parse_id(tokens[0], line_no, "row count");
      cols = detail::parse_id(tokens[1], line_no, "column count");
      declared = detail::parse_id(tokens[2], line_no, "entry count");
      have_size = true;
      edges.reserve(symmetrize ? declared * 2 : declared);
      continue;
    }
    if (tokens.size() < 2) {
      throw DataError("line " + std::to_string(line_no) + ": expected 'row col [value]'");
    }
    const std::uint64_t r = detail::parse_id(tokens[0], line_no, "row id");
    const std::uint64_t c = detail::parse_id(tokens[1], line_no, "column id");
    if (r < 1 || r > rows || c < 1 || c > cols) {
      throw DataError("line " + std::to_string(line_no) + ": entry (" + std::to_string(r) + ", " +
                      std::to_string(c) + ") is outside the declared " + std::to_string(rows) +
                      "x" + std::to_string(cols) + " shape");
    }
    const auto src = static_cast<VertexId>(r - 1);
    const auto dst = static_cast<VertexId>(c - 1);
    edges.emplace_back(src, dst);
    if (symmetrize && src != dst) edges.emplace_back(dst, src);
  }
  if (!have_size) throw DataError(path + ": missing size line");
  const std::uint64_t stored = symmetrize ? 0 : edges.size();
  if (!symmetrize && stored != declared) {
    throw DataError(path + ": declared " + std::to_string(declared) + " entries, found " +
                    std::to_string(stored));
  }
  return detail::csr_from_edges(rows > cols ? rows : cols, edges);
}

/// Plain edge-list loader: one 'src dst' pair per line, 0-based ids, '#' or
/// '%' comment lines. The vertex count is one past the largest id seen.
inline Csr load_edge_list(const std::string& path, bool symmetrize = false) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");

  std::string line;
  std::size_t line_no = 0;
  std::uint64_t max_id = 0;
  bool any = false;
  std::vector<std::pair<VertexId, VertexId>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && (line[0] == '#' || line[0] == '%')) continue;
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() < 2) {
      throw DataError("line " + std::to_string(line_no) + ": expected 'src dst'");
    }
    const std::uint64_t src = detail::parse_id(tokens[0], line_no, "source id");
    const std::uint64_t dst = detail::parse_id(tokens[1], line_no, "destination id");
    any = true;
    if (src > max_id) max_id = src;
    if (dst > max_id) max_id = dst;
    edges.emplace_back(static_cast<VertexId>(src), static_cast<VertexId>(dst));
    if (symmetrize && src != dst) {
      edges.emplace_back(static_cast<VertexId>(dst), static_cast<VertexId>(src));
    }
  }
  return detail::csr_from_edges(any ? max_id + 1 : 0, edges);
}

/// Plain-text CSR dump; the format golden tests pin byte for byte.
inline void write_csr(const Csr& csr, std::ostream& out) {
  out << "vertices " << csr.vertex_count << "\n";
  out << "edges " << csr.edge_count() << "\n";
  out << "offsets";
  for (std::uint64_t o : csr.offsets) out << ' ' << o;
  out << "\n";
  out << "destinations";
  for (VertexId d : csr.destinations) out << ' ' << d;
  out << "\n";
}

}  // namespace dyngraph::io
