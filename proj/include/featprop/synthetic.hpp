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

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "featprop/features.hpp"
#include "featprop/graph.hpp"
#include "featprop/rng.hpp"

// Synthetic graphs and attribute matrices for tests and benchmarks.
namespace featprop::synthetic {

/// Uniform random graph with about n * avg_degree / 2 undirected edges
/// (before deduplication), symmetrized, plus self-loops.
inline Graph random_graph(std::size_t n, double avg_degree, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto edges_wanted = static_cast<std::size_t>(std::llround(n * avg_degree / 2.0));
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(edges_wanted);
  if (n > 1) {
    while (edges.size() < edges_wanted) {
      const NodeId u = rng.below(static_cast<std::uint32_t>(n));
      const NodeId v = rng.below(static_cast<std::uint32_t>(n));
      if (u != v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges, true);
}

/// Path 0 - 1 - ... - (n-1), symmetrized.
inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    edges.emplace_back(static_cast<NodeId>(v), static_cast<NodeId>(v + 1));
  }
  return Graph::from_edges(n, edges, true);
}

/// Planted partition: node v belongs to class v % classes; each edge stays
/// inside the class with probability `homophily`.
inline Graph planted_partition(std::size_t n, std::size_t classes, double avg_degree,
                               double homophily, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto edges_wanted = static_cast<std::size_t>(std::llround(n * avg_degree / 2.0));
  const std::size_t per_class = n / classes;
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(edges_wanted);
  while (edges.size() < edges_wanted) {
    const NodeId u = rng.below(static_cast<std::uint32_t>(n));
    NodeId v;
    if (rng.uniform() < homophily && per_class > 1) {
      const auto k = rng.below(static_cast<std::uint32_t>(per_class));
      v = static_cast<NodeId>((k * classes + u % classes) % n);
    } else {
      v = rng.below(static_cast<std::uint32_t>(n));
    }
    if (u != v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges, true);
}

/// Dense uniform [lo, hi) entries.
inline FeatureMatrix uniform_features(std::size_t n, std::size_t F, std::uint64_t seed,
                                      double lo = 0.0, double hi = 1.0) {
  SplitMix64 rng(seed);
  FeatureMatrix X(n, F);
  for (auto& v : X.values()) v = lo + (hi - lo) * rng.uniform();
  return X;
}

/// Each entry non-zero with probability `density`, value uniform in (0, 1].
inline FeatureMatrix sparse_features(std::size_t n, std::size_t F, double density,
                                     std::uint64_t seed) {
  SplitMix64 rng(seed);
  FeatureMatrix X(n, F);
  for (auto& v : X.values()) {
    if (rng.uniform() < density) v = 1.0 - rng.uniform();
  }
  return X;
}

/**
 * Columns built from a few shared prototypes: column f is
 * rho * prototype[f % prototypes] + (1 - rho) * noise, with prototype entries
 * in [0.5, 1.5) and noise in [0, 1). rho near 1 gives strongly correlated columns.
 */
inline FeatureMatrix correlated_features(std::size_t n, std::size_t F, std::size_t prototypes,
                                         double rho, std::uint64_t seed) {
  SplitMix64 rng(seed);
  FeatureMatrix protos = uniform_features(n, prototypes, mix64(seed + 1), 0.5, 1.5);
  FeatureMatrix X(n, F);
  for (std::size_t f = 0; f < F; ++f) {
    const auto p = protos.col(f % prototypes);
    for (std::size_t v = 0; v < n; ++v) X(v, f) = rho * p[v] + (1.0 - rho) * rng.uniform();
  }
  return X;
}

/// Columns with pairwise disjoint supports (row v belongs to column v % F).
inline FeatureMatrix orthogonal_features(std::size_t n, std::size_t F, std::uint64_t seed) {
  SplitMix64 rng(seed);
  FeatureMatrix X(n, F);
  for (std::size_t v = 0; v < n; ++v) X(v, v % F) = 1.0 - rng.uniform();
  return X;
}

/// Class-dependent attributes: centroid of class (v % classes) plus noise.
inline FeatureMatrix class_features(std::size_t n, std::size_t F, std::size_t classes,
                                    double noise, std::uint64_t seed) {
  SplitMix64 rng(seed);
  FeatureMatrix centroids = uniform_features(classes, F, mix64(seed + 7), -1.0, 1.0);
  FeatureMatrix X(n, F);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t f = 0; f < F; ++f) {
      X(v, f) = centroids(v % classes, f) + noise * (2.0 * rng.uniform() - 1.0);
    }
  }
  return X;
}

}  // namespace featprop::synthetic
