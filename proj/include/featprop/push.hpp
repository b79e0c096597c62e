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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "featprop/common.hpp"
#include "featprop/features.hpp"
#include "featprop/graph.hpp"
#include "featprop/rng.hpp"

namespace featprop {

/**
 * Knobs of the feature propagation.
 *
 * `phi` and `delta` default to 1/n; a value of 0 means "not set" and is
 * resolved against the graph by resolved().
 */
struct PushConfig {
  double alpha = 0.1;    // teleport probability
  double conv_r = 0.5;   // convolution coefficient r in D^(r-1) A D^(-r)
  double lambda = 1e-4;  // absolute error bound
  double phi = 0.0;      // failure probability, 0 -> 1/n
  double delta = 0.0;    // PPR threshold used by verification, 0 -> 1/n
  std::uint64_t seed = 0;

  PushConfig resolved(std::size_t num_nodes) const {
    PushConfig out = *this;
    const double inv_n = 1.0 / static_cast<double>(std::max<std::size_t>(num_nodes, 2));
    if (out.phi == 0.0) out.phi = inv_n;
    if (out.delta == 0.0) out.delta = inv_n;
    out.validate();
    return out;
  }

  void validate() const {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::invalid_argument, what); };
    if (!(alpha > 0.0 && alpha < 1.0)) fail("alpha must lie in (0,1)");
    if (!(conv_r >= 0.0 && conv_r <= 1.0)) fail("conv_r must lie in [0,1]");
    if (!(lambda > 0.0 && lambda <= 1.0)) fail("lambda must lie in (0,1]");
    if (!(phi > 0.0 && phi < 1.0)) fail("phi must lie in (0,1)");
    if (!(delta > 0.0 && delta <= 1.0)) fail("delta must lie in (0,1]");
  }
};

/// Ratio between leftover residue mass and the number of sampled walks.
struct PushCoefficient {
  double beta = 0.0;
};

/// Operation counts; the complexity claims are checked against these rather
/// than wall-clock time.
struct WorkCounters {
  std::uint64_t pops = 0;
  std::uint64_t edge_pushes = 0;
  std::uint64_t walks = 0;
  std::uint64_t walk_steps = 0;  // one per stop-or-move draw

  std::uint64_t total() const noexcept { return pops + walk_steps; }

  WorkCounters& operator+=(const WorkCounters& o) noexcept {
    pops += o.pops;
    edge_pushes += o.edge_pushes;
    walks += o.walks;
    walk_steps += o.walk_steps;
    return *this;
  }
  friend bool operator==(const WorkCounters&, const WorkCounters&) = default;
};

/// beta_s = lambda^2 / ((2 lambda / 3 + 2) ln(2 / phi)).
inline PushCoefficient standard_push_coefficient(double lambda, double phi) {
  if (!(lambda > 0.0) || !(phi > 0.0 && phi < 1.0)) {
    throw Error(ErrorKind::invalid_argument, "standard_push_coefficient: bad lambda/phi");
  }
  return {lambda * lambda / ((2.0 * lambda / 3.0 + 2.0) * std::log(2.0 / phi))};
}

/// Balances push cost ||x||_1 / r_max against walk cost r_max m / beta.
inline double optimal_rmax(double beta, double x_l1, std::size_t num_edges) {
  return std::sqrt(beta * x_l1 / static_cast<double>(std::max<std::size_t>(num_edges, 1)));
}

/**
 * Per-worker scratch for one propagation: reserve, residue, and a FIFO of
 * active nodes with a membership bitmap. The queue never holds a node twice,
 * so a ring buffer of n slots suffices.
 */
class PushWorkspace {
 public:
  PushWorkspace() = default;
  explicit PushWorkspace(std::size_t n) { resize(n); }

  void resize(std::size_t n) {
    reserve.assign(n, 0.0);
    residue.assign(n, 0.0);
    queued_.assign(n, 0);
    ring_.assign(n, 0);
    head_ = size_ = 0;
    r_sum = 0.0;
  }

  /// Zeroes reserve, loads `weights` into residue.
  void load(std::span<const double> weights) {
    if (weights.size() != reserve.size()) resize(weights.size());
    std::fill(reserve.begin(), reserve.end(), 0.0);
    std::copy(weights.begin(), weights.end(), residue.begin());
    std::fill(queued_.begin(), queued_.end(), 0);
    head_ = size_ = 0;
    r_sum = 0.0;
  }

  std::size_t size() const noexcept { return reserve.size(); }

  bool queued(NodeId v) const noexcept { return queued_[v] != 0; }
  bool queue_empty() const noexcept { return size_ == 0; }

  void push_back(NodeId v) noexcept {
    queued_[v] = 1;
    ring_[(head_ + size_) % ring_.size()] = v;
    ++size_;
  }

  NodeId pop_front() noexcept {
    NodeId v = ring_[head_];
    head_ = (head_ + 1) % ring_.size();
    --size_;
    queued_[v] = 0;
    return v;
  }

  std::size_t memory_bytes() const noexcept {
    return (reserve.size() + residue.size()) * sizeof(double) + queued_.size() +
           ring_.size() * sizeof(NodeId);
  }

  std::vector<double> reserve;
  std::vector<double> residue;
  double r_sum = 0.0;

 private:
  std::vector<std::uint8_t> queued_;
  std::vector<NodeId> ring_;
  std::size_t head_ = 0;
  std::size_t size_ = 0;
};

/**
 * Forward push from the residues already loaded in `ws` until every node
 * satisfies residue[u] <= r_max * d(u). Each pop moves alpha of the residue
 * into the reserve and spreads the rest evenly over the out-neighbors.
 * Returns the leftover residue mass r_sum.
 */
inline double forward_push(const Graph& g, double alpha, double r_max, PushWorkspace& ws,
                           WorkCounters* counters = nullptr) {
  const std::size_t n = g.num_nodes();
  for (std::size_t v = 0; v < n; ++v) {
    const auto u = static_cast<NodeId>(v);
    if (ws.residue[v] > r_max * g.out_degree(u)) ws.push_back(u);
  }
  std::uint64_t pops = 0, edges = 0;
  while (!ws.queue_empty()) {
    const NodeId u = ws.pop_front();
    const double r = ws.residue[u];
    const auto nbrs = g.neighbors(u);
    ws.reserve[u] += alpha * r;
    // Cleared before spreading: the self-loop hands part of the mass back.
    ws.residue[u] = 0.0;
    const double share = (1.0 - alpha) * r / static_cast<double>(nbrs.size());
    for (NodeId t : nbrs) {
      ws.residue[t] += share;
      if (!ws.queued(t) && ws.residue[t] > r_max * g.out_degree(t)) ws.push_back(t);
    }
    ++pops;
    edges += nbrs.size();
  }
  double r_sum = 0.0;
  for (double r : ws.residue) r_sum += r;
  ws.r_sum = r_sum;
  if (counters) {
    counters->pops += pops;
    counters->edge_pushes += edges;
  }
  return r_sum;
}

/**
 * Monte-Carlo refinement of the residues left by forward_push.
 *
 * Node u with residue r launches ceil(r / beta) alpha-terminated walks, each
 * carrying r / walks into the reserve of the node it stops at. A walk may stop
 * before its first move. The estimator is unbiased and deposits exactly the
 * leftover mass.
 */
inline void random_walk_refine(const Graph& g, PushWorkspace& ws, double alpha, double beta,
                               SplitMix64& rng, WorkCounters* counters = nullptr) {
  if (!(beta > 0.0)) throw Error(ErrorKind::invalid_argument, "push coefficient must be > 0");
  std::uint64_t walks_total = 0, steps = 0;
  const std::size_t n = g.num_nodes();
  for (std::size_t v = 0; v < n; ++v) {
    const double r = ws.residue[v];
    if (!(r > 0.0)) continue;
    const auto walks = static_cast<std::uint64_t>(std::ceil(r / beta));
    const double weight = r / static_cast<double>(walks);
    for (std::uint64_t w = 0; w < walks; ++w) {
      auto cur = static_cast<NodeId>(v);
      for (;;) {
        ++steps;
        if (rng.uniform() < alpha) break;
        const auto nbrs = g.neighbors(cur);
        cur = nbrs[rng.below(static_cast<std::uint32_t>(nbrs.size()))];
      }
      ws.reserve[cur] += weight;
    }
    walks_total += walks;
  }
  if (counters) {
    counters->walks += walks_total;
    counters->walk_steps += steps;
  }
}

/// Approximate feature PPR of a unit-mass distribution: push to the optimal
/// threshold, then refine with walks. The estimate is left in ws.reserve.
inline void approximate_feature_ppr(const Graph& g, std::span<const double> weights,
                                    double alpha, PushCoefficient beta, std::uint64_t seed,
                                    PushWorkspace& ws, WorkCounters* counters = nullptr) {
  ws.load(weights);
  forward_push(g, alpha, optimal_rmax(beta.beta, 1.0, g.num_edges()), ws, counters);
  SplitMix64 rng(seed);
  random_walk_refine(g, ws, alpha, beta.beta, rng, counters);
}

/// Adds sign * scale * d(t)^(r-1) * estimate[t] to `out`.
inline void accumulate_post_scaled(std::span<const double> estimate, double scale, int sign,
                                   const DegreePowers& post, std::span<double> out) {
  const double factor = sign * scale;
  for (std::size_t t = 0; t < out.size(); ++t) out[t] += factor * post.values[t] * estimate[t];
}

inline void check_finite_column(std::span<const double> column, std::size_t index) {
  for (std::size_t v = 0; v < column.size(); ++v) {
    if (!std::isfinite(column[v])) {
      throw Error(ErrorKind::invalid_argument, "non-finite feature at (row " +
                                                   std::to_string(v) + ", column " +
                                                   std::to_string(index) + ")");
    }
  }
}

/**
 * One embedding column: approximates column `index` of
 * P = sum_l alpha (1-alpha)^l (D^(r-1) A D^(-r))^l X.
 *
 * Signed columns are split; each non-zero part is prescaled by d^(1-r),
 * normalized, propagated, and post-scaled by its mass times d^(r-1).
 */
inline std::vector<double> feature_push(const Graph& g, std::span<const double> column,
                                        const PushConfig& cfg, PushCoefficient beta,
                                        std::uint64_t index, PushWorkspace& ws,
                                        WorkCounters* counters = nullptr) {
  if (column.size() != g.num_nodes()) {
    throw Error(ErrorKind::shape, "feature column length " + std::to_string(column.size()) +
                                      " != node count " + std::to_string(g.num_nodes()));
  }
  check_finite_column(column, index);
  const auto pre = g.degree_powers(1.0 - cfg.conv_r);
  const auto post = g.degree_powers(cfg.conv_r - 1.0);
  std::vector<double> out(column.size(), 0.0);
  const auto parts = sign_split(column);
  for (SignPart part : {SignPart::positive, SignPart::negative}) {
    const bool pos = part == SignPart::positive;
    const auto nf = prescale_normalize(pos ? parts.pos : parts.neg, *pre, pos ? +1 : -1);
    if (nf.is_zero()) continue;
    approximate_feature_ppr(g, nf.weights, cfg.alpha, beta, column_seed(cfg.seed, index, part),
                            ws, counters);
    accumulate_post_scaled(ws.reserve, nf.scale, nf.sign, *post, out);
  }
  return out;
}

inline std::vector<double> feature_push(const Graph& g, std::span<const double> column,
                                        const PushConfig& cfg, PushCoefficient beta,
                                        std::uint64_t index = 0) {
  PushWorkspace ws(g.num_nodes());
  return feature_push(g, column, cfg, beta, index, ws);
}

}  // namespace featprop
