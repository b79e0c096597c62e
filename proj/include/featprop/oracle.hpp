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
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "featprop/features.hpp"
#include "featprop/graph.hpp"

namespace featprop {

inline constexpr std::size_t kOracleMaxNodes = 100000;

struct OracleConfig {
  double alpha = 0.1;
  double conv_r = 0.5;
  std::size_t max_hops = 0;

  /// Smallest hop count with (1-alpha)^(hops+1) <= tail_tol.
  static OracleConfig for_tolerance(double alpha, double conv_r, double tail_tol) {
    OracleConfig cfg{alpha, conv_r, 0};
    double tail = 1.0 - alpha;
    while (tail > tail_tol) {
      tail *= 1.0 - alpha;
      ++cfg.max_hops;
    }
    return cfg;
  }

  /// Mass not accounted for by the truncated series.
  double tail() const { return std::pow(1.0 - alpha, static_cast<double>(max_hops + 1)); }
};

namespace detail {

inline void check_oracle_guard(const Graph& g) {
  if (g.num_nodes() > kOracleMaxNodes) {
    throw Error(ErrorKind::guard, "oracle refuses graphs above " +
                                      std::to_string(kOracleMaxNodes) + " nodes (got " +
                                      std::to_string(g.num_nodes()) + ")");
  }
}

/// out = A D^-1 in: each node splits its value evenly over its out-neighbors.
inline void transition(const Graph& g, std::span<const double> in, std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t u = 0; u < g.num_nodes(); ++u) {
    if (in[u] == 0.0) continue;
    const auto nbrs = g.neighbors(static_cast<NodeId>(u));
    const double share = in[u] / static_cast<double>(nbrs.size());
    for (NodeId t : nbrs) out[t] += share;
  }
}

}  // namespace detail

/// sum_{l<=max_hops} alpha (1-alpha)^l (A D^-1)^l x. Sums to 1 - tail for unit x.
inline std::vector<double> exact_feature_ppr(const Graph& g, std::span<const double> x,
                                             double alpha, std::size_t max_hops) {
  detail::check_oracle_guard(g);
  const std::size_t n = g.num_nodes();
  std::vector<double> out(n, 0.0), cur(x.begin(), x.end()), next(n);
  double weight = alpha;
  for (std::size_t l = 0;; ++l) {
    for (std::size_t v = 0; v < n; ++v) out[v] += weight * cur[v];
    if (l == max_hops) break;
    detail::transition(g, cur, next);
    cur.swap(next);
    weight *= 1.0 - alpha;
  }
  return out;
}

/// P = sum_{l<=max_hops} alpha (1-alpha)^l (D^(r-1) A D^(-r))^l X.
inline EmbeddingMatrix exact_embedding(const Graph& g, const FeatureMatrix& X,
                                       const OracleConfig& cfg) {
  detail::check_oracle_guard(g);
  if (X.rows() != g.num_nodes()) {
    throw Error(ErrorKind::shape, "feature rows != node count");
  }
  const std::size_t n = g.num_nodes();
  // Applies D^(r-1) A D^(-r) directly, without the push-side factorization.
  const auto right = g.degree_powers(-cfg.conv_r);
  const auto left = g.degree_powers(cfg.conv_r - 1.0);
  EmbeddingMatrix P(n, X.cols());
  std::vector<double> cur(n), next(n);
  for (std::size_t f = 0; f < X.cols(); ++f) {
    auto x = X.col(f);
    std::copy(x.begin(), x.end(), cur.begin());
    auto out = P.col(f);
    double weight = cfg.alpha;
    for (std::size_t l = 0;; ++l) {
      for (std::size_t v = 0; v < n; ++v) out[v] += weight * cur[v];
      if (l == cfg.max_hops) break;
      std::fill(next.begin(), next.end(), 0.0);
      for (std::size_t u = 0; u < n; ++u) {
        const double val = cur[u] * right->values[u];
        if (val == 0.0) continue;
        for (NodeId t : g.neighbors(static_cast<NodeId>(u))) next[t] += val;
      }
      for (std::size_t v = 0; v < n; ++v) next[v] *= left->values[v];
      cur.swap(next);
      weight *= 1.0 - cfg.alpha;
    }
  }
  return P;
}

}  // namespace featprop
