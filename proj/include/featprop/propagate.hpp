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

#include <cstdint>
#include <span>
#include <vector>

#include "featprop/features.hpp"
#include "featprop/graph.hpp"
#include "featprop/parallel.hpp"
#include "featprop/push.hpp"
#include "featprop/reuse.hpp"
#include "featprop/rng.hpp"

namespace featprop {

struct PropagateOptions {
  bool reuse = true;
  ReuseConfig reuse_config;
  std::size_t threads = 1;
  /// Keep the unit-mass estimate of every part (needed by verification).
  bool keep_estimates = false;
};

/// One non-zero sign part of one feature column.
struct PartReport {
  std::size_t column = 0;
  SignPart part = SignPart::positive;
  double scale = 0.0;
  bool is_base = false;
  double theta_sum = 0.0;
  std::size_t iterations = 0;  // decomposition rounds, 0 if not decomposed
  double residual_l1 = 1.0;
  double beta = 0.0;           // coefficient used on the unit-mass pushed vector
  WorkCounters work;
};

struct Propagation {
  EmbeddingMatrix embedding;
  std::vector<PartReport> parts;
  std::vector<std::size_t> bases;  // indices into parts
  WorkCounters work;
  double beta_s = 0.0;
  std::size_t memory_bytes = 0;  // allocation-accounting estimate
  /// Unit-mass feature PPR estimate per part (only with keep_estimates).
  std::vector<std::vector<double>> estimates;
  /// Normalized source distribution per part (only with keep_estimates).
  std::vector<NormalizedFeature> sources;
};

namespace detail {

struct Part {
  std::size_t column;
  SignPart part;
  NormalizedFeature feature;
};

inline std::vector<Part> normalized_parts(const Graph& g, const FeatureMatrix& X,
                                          const PushConfig& cfg) {
  const auto pre = g.degree_powers(1.0 - cfg.conv_r);
  std::vector<Part> parts;
  for (std::size_t f = 0; f < X.cols(); ++f) {
    check_finite_column(X.col(f), f);
    auto split = sign_split(X.col(f));
    auto pos = prescale_normalize(split.pos, *pre, +1);
    if (!pos.is_zero()) parts.push_back({f, SignPart::positive, std::move(pos)});
    auto neg = prescale_normalize(split.neg, *pre, -1);
    if (!neg.is_zero()) parts.push_back({f, SignPart::negative, std::move(neg)});
  }
  return parts;
}

/// Rows sampled for approximate L1 distances; evenly strided, deterministic.
inline std::vector<std::size_t> sampled_rows(std::size_t n, std::size_t sample) {
  std::vector<std::size_t> rows;
  if (sample == 0 || sample >= n) return rows;
  rows.reserve(sample);
  for (std::size_t i = 0; i < sample; ++i) rows.push_back(i * n / sample);
  return rows;
}

}  // namespace detail

/**
 * Computes the approximate embedding matrix column by column.
 *
 * Without reuse every sign part is pushed with beta_s. With reuse, bases are
 * selected by nearest-neighbor votes among the normalized parts and pushed
 * with gamma beta_s first; every other part is decomposed over the bases of
 * other columns and only its residual is pushed, at the relaxed coefficient.
 * Each pushed vector is seeded by (seed, column, sign part), so the output
 * does not depend on the thread count.
 */
inline Propagation propagate(const Graph& g, const FeatureMatrix& X, const PushConfig& config,
                             const PropagateOptions& opts = {}) {
  if (X.rows() != g.num_nodes()) {
    throw Error(ErrorKind::shape, "feature rows " + std::to_string(X.rows()) +
                                      " != graph nodes " + std::to_string(g.num_nodes()));
  }
  const PushConfig cfg = config.resolved(g.num_nodes());
  opts.reuse_config.validate();
  const std::size_t n = g.num_nodes();
  const PushCoefficient beta_s = standard_push_coefficient(cfg.lambda, cfg.phi);
  const auto post = g.degree_powers(cfg.conv_r - 1.0);

  auto parts = detail::normalized_parts(g, X, cfg);
  const std::size_t count = parts.size();

  Propagation result;
  result.beta_s = beta_s.beta;
  result.parts.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto& rep = result.parts[i];
    rep.column = parts[i].column;
    rep.part = parts[i].part;
    rep.scale = parts[i].feature.scale;
    rep.beta = beta_s.beta;
  }

  std::size_t num_bases = opts.reuse ? opts.reuse_config.bases_for(X.cols()) : 0;
  if (count < 2) num_bases = 0;
  if (num_bases > 0) {
    std::vector<std::span<const double>> views;
    views.reserve(count);
    for (const auto& p : parts) views.emplace_back(p.feature.weights);
    const auto rows = detail::sampled_rows(n, opts.reuse_config.sample_rows);
    const auto votes = min_l1_distance_counter(views, rows);
    result.bases = select_bases(votes, std::min(num_bases, count));
  }
  std::vector<std::int64_t> base_slot(count, -1);
  for (std::size_t k = 0; k < result.bases.size(); ++k) {
    base_slot[result.bases[k]] = static_cast<std::int64_t>(k);
  }

  const std::size_t threads = std::max<std::size_t>(1, opts.threads);
  std::vector<PushWorkspace> workspaces(std::min(threads, std::max<std::size_t>(count, 1)));
  for (auto& ws : workspaces) ws.resize(n);
  std::vector<std::vector<double>> estimates(count);

  auto seed_of = [&](std::size_t i) { return column_seed(cfg.seed, parts[i].column, parts[i].part); };

  // Phase one: bases at high precision. Their estimates stay immutable below.
  const PushCoefficient beta_star{opts.reuse_config.gamma * beta_s.beta};
  parallel_for(result.bases.size(), threads, [&](std::size_t k, std::size_t worker) {
    const std::size_t i = result.bases[k];
    auto& ws = workspaces[worker];
    auto& rep = result.parts[i];
    rep.is_base = true;
    rep.beta = beta_star.beta;
    approximate_feature_ppr(g, parts[i].feature.weights, cfg.alpha, beta_star, seed_of(i), ws,
                            &rep.work);
    estimates[i] = ws.reserve;
  });

  // Phase two: everything else.
  parallel_for(count, threads, [&](std::size_t i, std::size_t worker) {
    if (base_slot[i] >= 0) return;
    auto& ws = workspaces[worker];
    auto& rep = result.parts[i];
    const auto& source = parts[i].feature.weights;

    std::vector<std::size_t> usable;
    std::vector<std::span<const double>> base_views;
    for (std::size_t b : result.bases) {
      if (parts[b].column == parts[i].column) continue;
      usable.push_back(b);
      base_views.emplace_back(parts[b].feature.weights);
    }
    if (usable.empty()) {
      approximate_feature_ppr(g, source, cfg.alpha, beta_s, seed_of(i), ws, &rep.work);
      estimates[i] = ws.reserve;
      return;
    }

    auto dec = decompose(source, base_views, opts.reuse_config.delta0);
    rep.iterations = dec.iterations;
    rep.theta_sum = dec.theta_sum;
    if (dec.theta.empty()) {
      rep.residual_l1 = 1.0;
      approximate_feature_ppr(g, source, cfg.alpha, beta_s, seed_of(i), ws, &rep.work);
      estimates[i] = ws.reserve;
      return;
    }

    const auto coeff = reuse_coefficients(cfg, opts.reuse_config, dec.theta_sum);
    double residual_l1 = 0.0;
    for (double v : dec.residual) residual_l1 += v;
    rep.residual_l1 = residual_l1;

    std::vector<double> estimate(n, 0.0);
    if (residual_l1 >= 1e-12) {
      for (auto& v : dec.residual) v /= residual_l1;
      // Pushing x'/|x'| with beta'/|x'| equals pushing x' itself with beta'.
      const PushCoefficient beta_eff{coeff.beta_prime / residual_l1};
      rep.beta = beta_eff.beta;
      approximate_feature_ppr(g, dec.residual, cfg.alpha, beta_eff, seed_of(i), ws, &rep.work);
      for (std::size_t t = 0; t < n; ++t) estimate[t] = residual_l1 * ws.reserve[t];
    }
    for (const auto& [pos, theta] : dec.theta) {
      const auto& base_est = estimates[usable[pos]];
      for (std::size_t t = 0; t < n; ++t) estimate[t] += theta * base_est[t];
    }
    estimates[i] = std::move(estimate);
  });

  result.embedding = EmbeddingMatrix(n, X.cols());
  for (std::size_t i = 0; i < count; ++i) {
    accumulate_post_scaled(estimates[i], parts[i].feature.scale, parts[i].feature.sign, *post,
                           result.embedding.col(parts[i].column));
    result.work += result.parts[i].work;
  }

  result.memory_bytes = g.memory_bytes() + X.memory_bytes() + result.embedding.memory_bytes() +
                        2 * n * sizeof(double) /* degree powers */ +
                        count * n * sizeof(double) /* normalized parts */ +
                        count * n * sizeof(double) /* estimates */;
  for (const auto& ws : workspaces) result.memory_bytes += ws.memory_bytes();

  if (opts.keep_estimates) {
    result.estimates = std::move(estimates);
    result.sources.reserve(count);
    for (auto& p : parts) result.sources.push_back(std::move(p.feature));
  }
  return result;
}

/// Feature-Reuse embedding with default options otherwise.
inline EmbeddingMatrix feature_reuse_embed(const Graph& g, const FeatureMatrix& X,
                                           const PushConfig& cfg, const ReuseConfig& rc,
                                           std::size_t threads = 1) {
  PropagateOptions opts;
  opts.reuse = true;
  opts.reuse_config = rc;
  opts.threads = threads;
  return propagate(g, X, cfg, opts).embedding;
}

}  // namespace featprop
