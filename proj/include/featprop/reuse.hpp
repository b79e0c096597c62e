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
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "featprop/common.hpp"
#include "featprop/push.hpp"

namespace featprop {

/// Feature-reuse parameters. num_bases unset -> ceil(0.02 F); 0 disables reuse.
struct ReuseConfig {
  std::optional<std::size_t> num_bases;
  double gamma = 0.2;
  double delta0 = 1.0 / 16.0;
  std::size_t sample_rows = 0;  // > 0: estimate L1 distances on a row sample

  std::size_t bases_for(std::size_t num_features) const {
    if (num_bases) return *num_bases;
    return static_cast<std::size_t>(std::ceil(0.02 * static_cast<double>(num_features)));
  }

  void validate() const {
    if (!(gamma > 0.0 && gamma <= 1.0)) {
      throw Error(ErrorKind::invalid_argument, "gamma must lie in (0,1]");
    }
    if (!(delta0 > 0.0 && delta0 <= 1.0)) {
      throw Error(ErrorKind::invalid_argument, "delta0 must lie in (0,1]");
    }
  }
};

/// x = sum_i theta_i b_i + residual, residual >= 0.
struct Decomposition {
  std::vector<std::pair<std::size_t, double>> theta;  // (base position, coefficient)
  std::vector<double> residual;
  double theta_sum = 0.0;
  std::size_t iterations = 0;
};

inline double l1_distance(std::span<const double> a, std::span<const double> b,
                          std::span<const std::size_t> rows = {}) {
  double d = 0.0;
  if (rows.empty()) {
    for (std::size_t v = 0; v < a.size(); ++v) d += std::abs(a[v] - b[v]);
  } else {
    for (std::size_t v : rows) d += std::abs(a[v] - b[v]);
  }
  return d;
}

/**
 * Nearest-neighbor vote count: every non-zero column votes for its L1-nearest
 * other non-zero column (ties to the lower index). Zero columns neither vote
 * nor receive votes. A non-empty `rows` restricts distances to those rows.
 */
inline std::vector<std::uint64_t> min_l1_distance_counter(
    std::span<const std::span<const double>> columns, std::span<const std::size_t> rows = {}) {
  const std::size_t count = columns.size();
  std::vector<std::uint64_t> votes(count, 0);
  std::vector<std::uint8_t> nonzero(count, 0);
  std::size_t active = 0;
  for (std::size_t f = 0; f < count; ++f) {
    nonzero[f] = std::any_of(columns[f].begin(), columns[f].end(), [](double v) { return v != 0.0; });
    active += nonzero[f];
  }
  if (active < 2) return votes;

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(count * count, inf);
  for (std::size_t a = 0; a < count; ++a) {
    if (!nonzero[a]) continue;
    for (std::size_t b = a + 1; b < count; ++b) {
      if (!nonzero[b]) continue;
      dist[a * count + b] = dist[b * count + a] = l1_distance(columns[a], columns[b], rows);
    }
  }
  for (std::size_t g = 0; g < count; ++g) {
    if (!nonzero[g]) continue;
    std::size_t best = count;
    double best_d = inf;
    for (std::size_t f = 0; f < count; ++f) {
      if (f == g || !nonzero[f]) continue;
      if (dist[g * count + f] < best_d) {
        best_d = dist[g * count + f];
        best = f;
      }
    }
    ++votes[best];
  }
  return votes;
}

/// Indices of the num_bases largest counters (ties to lower index), ascending.
inline std::vector<std::size_t> select_bases(std::span<const std::uint64_t> counters,
                                             std::size_t num_bases) {
  std::vector<std::size_t> order(counters.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return counters[a] > counters[b]; });
  order.resize(std::min(num_bases, order.size()));
  std::sort(order.begin(), order.end());
  return order;
}

/**
 * Greedy decomposition of a normalized column over normalized bases.
 *
 * Each round takes, over the unused bases, the largest coefficient that keeps
 * the residual non-negative (min of residual/base over the base's support,
 * clamped below 1), subtracts it, and continues while that coefficient is at
 * least delta0. The first round always runs.
 */
inline Decomposition decompose(std::span<const double> x,
                               std::span<const std::span<const double>> bases, double delta0) {
  Decomposition out;
  out.residual.assign(x.begin(), x.end());
  std::vector<std::uint8_t> used(bases.size(), 0);
  std::size_t remaining = bases.size();
  const double kBelowOne = std::nextafter(1.0, 0.0);

  auto coefficient = [&](std::span<const double> b) {
    double theta = std::numeric_limits<double>::infinity();
    bool support = false;
    for (std::size_t v = 0; v < b.size(); ++v) {
      if (b[v] > 0.0) {
        support = true;
        theta = std::min(theta, out.residual[v] / b[v]);
        if (theta == 0.0) break;
      }
    }
    return support ? std::min(theta, kBelowOne) : 0.0;
  };

  double best_theta = 0.0;
  do {
    ++out.iterations;
    std::size_t best = bases.size();
    best_theta = 0.0;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      if (used[i]) continue;
      const double theta = coefficient(bases[i]);
      if (theta > best_theta) {
        best_theta = theta;
        best = i;
      }
    }
    if (best == bases.size()) break;
    used[best] = 1;
    --remaining;
    const auto b = bases[best];
    for (std::size_t v = 0; v < b.size(); ++v) {
      if (b[v] > 0.0) out.residual[v] = std::max(0.0, out.residual[v] - best_theta * b[v]);
    }
    out.theta.emplace_back(best, best_theta);
    out.theta_sum += best_theta;
  } while (best_theta >= delta0 && remaining > 0);
  return out;
}

struct ReuseCoefficients {
  double beta_star = 0.0;   // bases
  double beta_prime = 0.0;  // residuals, after flooring at beta_star
};

/**
 * beta* = gamma beta_s and beta' = (1 - gamma theta_sum) beta_s, floored at
 * beta*. Checks the precision condition
 *   beta' <= (lambda^2 / ln(2/phi) - 2 theta_sum beta*) / (2 lambda / 3 + 2)
 * on the unfloored value; a violation is a bug.
 */
inline ReuseCoefficients reuse_coefficients(const PushConfig& cfg, const ReuseConfig& rc,
                                            double theta_sum) {
  if (!(theta_sum >= 0.0 && theta_sum <= 1.0 + 1e-9)) {
    throw Error(ErrorKind::internal, "theta_sum outside [0,1]");
  }
  theta_sum = std::min(theta_sum, 1.0);
  const double beta_s = standard_push_coefficient(cfg.lambda, cfg.phi).beta;
  ReuseCoefficients out;
  out.beta_star = rc.gamma * beta_s;
  const double unfloored = (1.0 - rc.gamma * theta_sum) * beta_s;
  const double bound =
      (cfg.lambda * cfg.lambda / std::log(2.0 / cfg.phi) - 2.0 * theta_sum * out.beta_star) /
      (2.0 * cfg.lambda / 3.0 + 2.0);
  if (unfloored > bound + 1e-12 * beta_s) {
    throw Error(ErrorKind::internal, "residual push coefficient violates the precision bound");
  }
  out.beta_prime = std::max(unfloored, out.beta_star);
  if (!(out.beta_prime >= out.beta_star)) {
    throw Error(ErrorKind::internal, "residual push coefficient below base coefficient");
  }
  return out;
}

}  // namespace featprop
