/*
Copyright 2026 The featprop Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "featprop/common.hpp"

namespace featprop {

/// values[v] = d(v)^exponent for every node.
struct DegreePowers {
  double exponent = 0.0;
  std::vector<double> values;
};

/**
 * Read-only compressed sparse row adjacency.
 *
 * Every node carries exactly one self-loop, so out_degree(v) >= 1 and the
 * column-stochastic transition A D^-1 never drops mass. Adjacency lists are
 * sorted and duplicate-free. Safe for concurrent reads; the degree-power
 * cache is internally synchronized.
 */
class Graph {
 public:
  Graph() : cache_(std::make_unique<PowerCache>()) {}

  /// Takes ownership of a CSR structure and validates every invariant.
  Graph(std::vector<std::uint64_t> row_offsets, std::vector<NodeId> column_targets)
      : row_offsets_(std::move(row_offsets)),
        column_targets_(std::move(column_targets)),
        cache_(std::make_unique<PowerCache>()) {
    validate();
  }

  Graph(Graph&&) noexcept = default;
  Graph& operator=(Graph&&) noexcept = default;

  /// Builds a graph from directed edges. Self-loops are added for every
  /// node, duplicates removed, and with `symmetrize` each (u,v) also yields
  /// (v,u).
  static Graph from_edges(std::size_t num_nodes,
                          std::span<const std::pair<NodeId, NodeId>> edges,
                          bool symmetrize) {
    if (num_nodes == 0) {
      throw Error(ErrorKind::invalid_argument, "graph must have at least one node");
    }
    if (num_nodes > static_cast<std::size_t>(std::numeric_limits<NodeId>::max())) {
      throw Error(ErrorKind::invalid_argument, "node count exceeds 32-bit id width");
    }
    std::vector<std::uint64_t> counts(num_nodes + 1, 0);
    auto check = [&](NodeId v) {
      if (v >= num_nodes) {
        throw Error(ErrorKind::invalid_argument,
                    "node id " + std::to_string(v) + " out of range for n=" +
                        std::to_string(num_nodes));
      }
    };
    for (const auto& [u, v] : edges) {
      check(u);
      check(v);
      ++counts[u + 1];
      if (symmetrize) ++counts[v + 1];
    }
    for (std::size_t v = 0; v < num_nodes; ++v) ++counts[v + 1];
    for (std::size_t v = 0; v < num_nodes; ++v) counts[v + 1] += counts[v];

    std::vector<NodeId> targets(counts[num_nodes]);
    std::vector<std::uint64_t> cursor(counts.begin(), counts.end() - 1);
    for (const auto& [u, v] : edges) {
      targets[cursor[u]++] = v;
      if (symmetrize) targets[cursor[v]++] = u;
    }
    for (std::size_t v = 0; v < num_nodes; ++v) {
      targets[cursor[v]++] = static_cast<NodeId>(v);
    }

    // Sort and deduplicate each row, compacting in place.
    std::vector<std::uint64_t> offsets(num_nodes + 1, 0);
    std::uint64_t write = 0;
    for (std::size_t v = 0; v < num_nodes; ++v) {
      auto first = targets.begin() + static_cast<std::ptrdiff_t>(counts[v]);
      auto last = targets.begin() + static_cast<std::ptrdiff_t>(counts[v + 1]);
      std::sort(first, last);
      last = std::unique(first, last);
      for (auto it = first; it != last; ++it) targets[write++] = *it;
      offsets[v + 1] = write;
    }
    targets.resize(write);
    targets.shrink_to_fit();
    return Graph(std::move(offsets), std::move(targets));
  }

  std::size_t num_nodes() const noexcept {
    return row_offsets_.empty() ? 0 : row_offsets_.size() - 1;
  }
  std::size_t num_edges() const noexcept { return column_targets_.size(); }

  std::uint32_t out_degree(NodeId v) const noexcept {
    return static_cast<std::uint32_t>(row_offsets_[v + 1] - row_offsets_[v]);
  }

  /// Out-neighbors without bounds checking; hot loops use this.
  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {column_targets_.data() + row_offsets_[v],
            static_cast<std::size_t>(row_offsets_[v + 1] - row_offsets_[v])};
  }

  /// Bounds-checked out-neighbors.
  std::span<const NodeId> out_neighbors(std::size_t v) const {
    if (v >= num_nodes()) {
      throw Error(ErrorKind::invalid_argument,
                  "node id " + std::to_string(v) + " out of range for n=" +
                      std::to_string(num_nodes()));
    }
    return neighbors(static_cast<NodeId>(v));
  }

  std::span<const std::uint64_t> row_offsets() const noexcept { return row_offsets_; }
  std::span<const NodeId> column_targets() const noexcept { return column_targets_; }

  std::vector<std::uint32_t> out_degrees() const {
    std::vector<std::uint32_t> d(num_nodes());
    for (std::size_t v = 0; v < d.size(); ++v) d[v] = out_degree(static_cast<NodeId>(v));
    return d;
  }

  /// d(v)^exponent, computed on first request and cached per exponent.
  std::shared_ptr<const DegreePowers> degree_powers(double exponent) const {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->entries.find(exponent);
    if (it != cache_->entries.end()) return it->second;
    auto dp = std::make_shared<DegreePowers>();
    dp->exponent = exponent;
    dp->values.resize(num_nodes());
    for (std::size_t v = 0; v < dp->values.size(); ++v) {
      dp->values[v] = std::pow(static_cast<double>(out_degree(static_cast<NodeId>(v))), exponent);
    }
    cache_->entries.emplace(exponent, dp);
    return dp;
  }

  std::size_t memory_bytes() const noexcept {
    return row_offsets_.size() * sizeof(std::uint64_t) + column_targets_.size() * sizeof(NodeId);
  }

  bool has_edge(NodeId u, NodeId v) const {
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

 private:
  struct PowerCache {
    std::mutex mutex;
    std::map<double, std::shared_ptr<const DegreePowers>> entries;
  };

  void validate() const {
    if (row_offsets_.size() < 2) {
      throw Error(ErrorKind::parse, "graph must have at least one node");
    }
    if (row_offsets_.front() != 0 || row_offsets_.back() != column_targets_.size()) {
      throw Error(ErrorKind::parse, "row offsets do not span the target array");
    }
    const std::size_t n = num_nodes();
    for (std::size_t v = 0; v < n; ++v) {
      if (row_offsets_[v + 1] < row_offsets_[v]) {
        throw Error(ErrorKind::parse, "row offsets decrease at node " + std::to_string(v));
      }
      auto row = neighbors(static_cast<NodeId>(v));
      bool self = false;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] >= n) {
          throw Error(ErrorKind::parse, "target out of range in row " + std::to_string(v));
        }
        if (i > 0 && row[i] <= row[i - 1]) {
          throw Error(ErrorKind::parse, "row " + std::to_string(v) + " unsorted or duplicated");
        }
        self = self || row[i] == v;
      }
      if (!self) {
        throw Error(ErrorKind::parse, "node " + std::to_string(v) + " lacks a self-loop");
      }
    }
  }

  std::vector<std::uint64_t> row_offsets_;
  std::vector<NodeId> column_targets_;
  std::unique_ptr<PowerCache> cache_;
};

/// Free-function form of Graph::degree_powers.
inline std::shared_ptr<const DegreePowers> degree_powers(const Graph& g, double exponent) {
  return g.degree_powers(exponent);
}

// ---------------------------------------------------------------------------
// Edge-list text format: "u v" per line, '#' comments. An optional
// "# nodes: N" comment fixes the node count explicitly.

inline Graph parse_edge_list(std::istream& in, bool symmetrize) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::uint64_t max_id = 0;
  bool any = false;
  std::uint64_t explicit_n = 0;
  std::string line;
  std::size_t lineno = 0;
  constexpr std::uint64_t kMaxId = std::numeric_limits<NodeId>::max() - 1;

  auto parse_id = [&](std::string_view& rest, std::uint64_t& out) {
    std::size_t i = 0;
    while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t' || rest[i] == '\r')) ++i;
    rest.remove_prefix(i);
    if (rest.empty()) return false;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), out);
    if (ec == std::errc::result_out_of_range) {
      throw Error(ErrorKind::parse,
                  "line " + std::to_string(lineno) + ": node id overflows 32-bit width");
    }
    if (ec != std::errc()) return false;
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    return true;
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    view.remove_prefix(first);
    if (view.front() == '#') {
      constexpr std::string_view kHeader = "# nodes:";
      if (view.substr(0, kHeader.size()) == kHeader) {
        std::string_view rest = view.substr(kHeader.size());
        if (!parse_id(rest, explicit_n) || explicit_n == 0) {
          throw Error(ErrorKind::parse, "line " + std::to_string(lineno) + ": bad node header");
        }
      }
      continue;
    }
    std::uint64_t u = 0, v = 0;
    std::string_view rest = view;
    if (!parse_id(rest, u) || !parse_id(rest, v) ||
        rest.find_first_not_of(" \t\r") != std::string_view::npos) {
      throw Error(ErrorKind::parse,
                  "line " + std::to_string(lineno) + ": expected two non-negative node ids");
    }
    if (u > kMaxId || v > kMaxId) {
      throw Error(ErrorKind::parse,
                  "line " + std::to_string(lineno) + ": node id overflows 32-bit width");
    }
    max_id = std::max({max_id, u, v});
    any = true;
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  if (!any && explicit_n == 0) throw Error(ErrorKind::parse, "edge list is empty");
  std::uint64_t n = any ? max_id + 1 : 0;
  if (explicit_n != 0) {
    if (explicit_n < n) {
      throw Error(ErrorKind::parse, "node id " + std::to_string(max_id) +
                                        " exceeds declared node count " +
                                        std::to_string(explicit_n));
    }
    n = explicit_n;
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges, symmetrize);
}

inline Graph load_edge_list(const std::string& path, bool symmetrize) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open edge list " + path);
  return parse_edge_list(in, symmetrize);
}

inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << "# nodes: " << g.num_nodes() << '\n';
  for (std::size_t u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.neighbors(static_cast<NodeId>(u))) {
      if (v != u) os << u << ' ' << v << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Binary cache: "SCGR", u32 version, u64 n, u64 m, (n+1) x u64 offsets,
// m x u32 targets, all little-endian.

inline constexpr std::uint32_t kGraphCacheVersion = 1;

inline void write_graph_cache(std::ostream& os, const Graph& g) {
  detail::write_magic(os, "SCGR");
  detail::write_le<std::uint32_t>(os, kGraphCacheVersion);
  detail::write_le<std::uint64_t>(os, g.num_nodes());
  detail::write_le<std::uint64_t>(os, g.num_edges());
  for (auto off : g.row_offsets()) detail::write_le<std::uint64_t>(os, off);
  for (auto t : g.column_targets()) detail::write_le<std::uint32_t>(os, t);
}

inline Graph read_graph_cache(std::istream& is) {
  detail::expect_magic(is, "SCGR");
  auto version = detail::read_le<std::uint32_t>(is, "graph cache version");
  if (version != kGraphCacheVersion) {
    throw Error(ErrorKind::parse, "unsupported graph cache version " + std::to_string(version));
  }
  auto n = detail::read_le<std::uint64_t>(is, "node count");
  auto m = detail::read_le<std::uint64_t>(is, "edge count");
  if (n == 0 || n > std::numeric_limits<NodeId>::max()) {
    throw Error(ErrorKind::parse, "graph cache node count out of range");
  }
  std::vector<std::uint64_t> offsets(n + 1);
  for (auto& off : offsets) off = detail::read_le<std::uint64_t>(is, "row offsets");
  std::vector<NodeId> targets(m);
  for (auto& t : targets) t = detail::read_le<std::uint32_t>(is, "column targets");
  return Graph(std::move(offsets), std::move(targets));
}

inline void save_graph_cache(const std::string& path, const Graph& g) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::io, "cannot write " + path);
  write_graph_cache(os, g);
  if (!os) throw Error(ErrorKind::io, "write failed for " + path);
}

inline Graph load_graph_cache(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::io, "cannot open " + path);
  return read_graph_cache(is);
}

/// Loads either format, sniffing the "SCGR" magic.
inline Graph load_graph(const std::string& path, bool symmetrize) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::io, "cannot open graph " + path);
  char magic[4] = {};
  is.read(magic, 4);
  if (is && std::string_view(magic, 4) == "SCGR") {
    is.seekg(0);
    return read_graph_cache(is);
  }
  return load_edge_list(path, symmetrize);
}

}  // namespace featprop
