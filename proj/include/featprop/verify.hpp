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
#include <vector>

#include "featprop/oracle.hpp"
#include "featprop/propagate.hpp"

namespace featprop {

struct VerifyOptions {
  std::size_t runs = 100;
  std::size_t threads = 1;
  bool reuse = false;  // check the reuse estimates instead of plain push
  ReuseConfig reuse_config;
  double slack_sigmas = 3.0;
  double oracle_tail = 0.0;  // 0 -> lambda / 10
};

/// Outcome of comparing approximate feature PPR against the oracle.
struct VerifyReport {
  std::vector<std::size_t> part_column;
  std::vector<double> part_max_error;  // worst over runs, qualifying entries only
  std::size_t trials = 0;              // (part, run) pairs with a qualifying entry
  std::size_t satisfied = 0;
  double satisfaction_rate = 1.0;
  double required_rate = 0.0;
  bool vacuous = false;
  double max_mass_error = 0.0;      // max |sum estimate - 1|
  double mean_reuse_difference = 0.0;  // mean |P_reuse - P_noreuse| on run 0
  bool passed = true;
};

/**
 * Runs `runs` seeded propagations (seed, seed+1, ...) and checks, per sign
 * part and run, that max |estimate - oracle| <= lambda over the entries whose
 * oracle value exceeds delta. Passes when the satisfied fraction is at least
 * 1 - phi minus `slack_sigmas` binomial standard deviations.
 */
inline VerifyReport verify_against_oracle(const Graph& g, const FeatureMatrix& X,
                                          const PushConfig& config, const VerifyOptions& opts) {
  const PushConfig cfg = config.resolved(g.num_nodes());
  const double tail = opts.oracle_tail > 0.0 ? opts.oracle_tail : cfg.lambda / 10.0;
  const auto oracle_cfg = OracleConfig::for_tolerance(cfg.alpha, cfg.conv_r, tail);

  PropagateOptions popts;
  popts.reuse = opts.reuse;
  popts.reuse_config = opts.reuse_config;
  popts.threads = opts.threads;
  popts.keep_estimates = true;

  VerifyReport rep;
  std::vector<std::vector<double>> oracle;
  for (std::size_t run = 0; run < opts.runs; ++run) {
    PushConfig run_cfg = cfg;
    run_cfg.seed = cfg.seed + run;
    const auto prop = propagate(g, X, run_cfg, popts);
    if (run == 0) {
      for (std::size_t i = 0; i < prop.sources.size(); ++i) {
        oracle.push_back(exact_feature_ppr(g, prop.sources[i].weights, cfg.alpha,
                                           oracle_cfg.max_hops));
        rep.part_column.push_back(prop.parts[i].column);
      }
      rep.part_max_error.assign(oracle.size(), 0.0);
      PropagateOptions other = popts;
      other.reuse = !opts.reuse;
      other.keep_estimates = false;
      const auto alt = propagate(g, X, run_cfg, other);
      double diff = 0.0;
      for (std::size_t k = 0; k < alt.embedding.values().size(); ++k) {
        diff += std::abs(alt.embedding.values()[k] - prop.embedding.values()[k]);
      }
      rep.mean_reuse_difference =
          diff / static_cast<double>(std::max<std::size_t>(1, alt.embedding.values().size()));
    }
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      const auto& est = prop.estimates[i];
      double mass = 0.0, worst = 0.0;
      bool qualifying = false;
      for (std::size_t t = 0; t < est.size(); ++t) {
        mass += est[t];
        if (oracle[i][t] > cfg.delta) {
          qualifying = true;
          worst = std::max(worst, std::abs(est[t] - oracle[i][t]));
        }
      }
      rep.max_mass_error = std::max(rep.max_mass_error, std::abs(mass - 1.0));
      if (!qualifying) continue;
      rep.part_max_error[i] = std::max(rep.part_max_error[i], worst);
      ++rep.trials;
      rep.satisfied += worst <= cfg.lambda;
    }
  }
  rep.vacuous = rep.trials == 0;
  if (!rep.vacuous) {
    const double n = static_cast<double>(rep.trials);
    rep.satisfaction_rate = static_cast<double>(rep.satisfied) / n;
    rep.required_rate = 1.0 - cfg.phi - opts.slack_sigmas * std::sqrt(cfg.phi * (1.0 - cfg.phi) / n);
    rep.passed = rep.satisfaction_rate >= rep.required_rate;
  }
  return rep;
}

}  // namespace featprop
