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
// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "featprop/featprop.hpp"
#include "featprop/manifest.hpp"
#include "featprop/synthetic.hpp"
#include "featprop/trainer.hpp"
#include "featprop/verify.hpp"

namespace {

using namespace featprop;

// Pinned tolerances and thresholds.
constexpr double kC1Lambda = 0.05;
constexpr double kC1Phi = 0.1;
constexpr std::size_t kC1Graphs = 10;
constexpr std::size_t kC1Runs = 200;
constexpr std::size_t kC1Features = 16;
constexpr double kC1SlackSigmas = 3.0;
constexpr std::size_t kC2Seeds = 10000;
constexpr double kC2StandardErrors = 4.0;
constexpr double kC2RoundingFloor = 1e-12;
constexpr double kC3MassTolerance = 1e-9;
constexpr double kC4Tolerance = 1e-10;
constexpr int kC4MaxPower = 5;
constexpr double kC5Tolerance = 1e-12;
constexpr std::size_t kC5Cases = 1000;
constexpr double kC6Lambda = 1e-3;
constexpr double kC7Gamma = 0.25;
constexpr double kC7ThetaSum = 0.5;
constexpr double kC7MaxRatio = 0.85;
constexpr double kC7OrthogonalBand = 0.10;
constexpr double kC8ExponentLo = 0.3;
constexpr double kC8ExponentHi = 0.7;
constexpr double kC8MemoryBand = 0.20;
constexpr double kC10GradTolerance = 1e-4;
constexpr double kC10MinF1 = 0.99;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Graph i of the criterion-1 family: n in [100, 500], average degree in [5, 20].
Graph c1_graph(std::size_t i) {
  const std::size_t n = 100 + 400 * i / (kC1Graphs - 1);
  const double deg = 5.0 + 15.0 * static_cast<double>(i) / (kC1Graphs - 1);
  return synthetic::random_graph(n, deg, 1000 + i);
}

PushConfig c1_config(std::size_t i) {
  PushConfig cfg;
  cfg.lambda = kC1Lambda;
  cfg.phi = kC1Phi;
  cfg.delta = 0.0;  // 1/n
  cfg.seed = 77 * i;
  return cfg;
}

// Shared by criteria 1, 3 and 6: runs the lambda-bound check on every graph.
struct BoundSuite {
  std::size_t trials = 0, satisfied = 0, failed_graphs = 0;
  double worst_rate = 1.0, max_mass_error = 0.0, max_required = 0.0;
};

BoundSuite run_bound_suite(bool reuse) {
  BoundSuite out;
  for (std::size_t i = 0; i < kC1Graphs; ++i) {
    const Graph g = c1_graph(i);
    const FeatureMatrix X =
        reuse ? synthetic::correlated_features(g.num_nodes(), kC1Features, 4, 0.9, 500 + i)
              : synthetic::uniform_features(g.num_nodes(), kC1Features, 500 + i, -1.0, 1.0);
    VerifyOptions vo;
    vo.runs = kC1Runs;
    vo.reuse = reuse;
    vo.reuse_config.num_bases = 4;
    vo.slack_sigmas = kC1SlackSigmas;
    const auto rep = verify_against_oracle(g, X, c1_config(i), vo);
    out.trials += rep.trials;
    out.satisfied += rep.satisfied;
    out.failed_graphs += (!rep.passed || rep.vacuous);
    out.worst_rate = std::min(out.worst_rate, rep.satisfaction_rate);
    out.max_required = std::max(out.max_required, rep.required_rate);
    out.max_mass_error = std::max(out.max_mass_error, rep.max_mass_error);
  }
  return out;
}

const BoundSuite& plain_suite() {
  static const BoundSuite s = run_bound_suite(false);
  return s;
}

Outcome criterion1() {
  const auto& s = plain_suite();
  Outcome o;
  o.pass = s.failed_graphs == 0;
  o.detail = std::to_string(s.satisfied) + "/" + std::to_string(s.trials) +
             " (column part, run) pairs within lambda; worst graph rate " +
             fmt("%.4f", s.worst_rate) + ", strictest per-graph requirement " +
             fmt("%.4f", s.max_required);
  return o;
}

Outcome criterion2() {
  const Graph g = synthetic::random_graph(40, 4, 2);
  const std::size_t n = g.num_nodes();
  const double alpha = 0.2;
  SplitMix64 rng(5);
  std::vector<double> x(n);
  double s = 0;
  for (auto& v : x) s += v = rng.uniform();
  for (auto& v : x) v /= s;
  const auto beta = standard_push_coefficient(0.1, 0.1);
  const auto oracle = exact_feature_ppr(g, x, alpha,
                                        OracleConfig::for_tolerance(alpha, 0.5, 1e-15).max_hops);
  std::vector<double> mean(n, 0.0), sq(n, 0.0);
  PushWorkspace ws(n);
  for (std::uint64_t seed = 0; seed < kC2Seeds; ++seed) {
    approximate_feature_ppr(g, x, alpha, beta, seed, ws);
    for (std::size_t t = 0; t < n; ++t) {
      mean[t] += ws.reserve[t];
      sq[t] += ws.reserve[t] * ws.reserve[t];
    }
  }
  const double N = static_cast<double>(kC2Seeds);
  double worst = 0.0;
  std::size_t bad = 0;
  for (std::size_t t = 0; t < n; ++t) {
    mean[t] /= N;
    const double var = std::max(0.0, (sq[t] / N - mean[t] * mean[t]) * N / (N - 1));
    const double se = std::sqrt(var / N);
    const double dev = std::abs(mean[t] - oracle[t]);
    if (dev > kC2StandardErrors * se + kC2RoundingFloor) ++bad;
    if (se > 0) worst = std::max(worst, dev / se);
  }
  return {bad == 0, std::to_string(n) + " entries, max |mean - oracle| = " + fmt("%.2f", worst) +
                        " standard errors, " + std::to_string(bad) + " outside 4 SE"};
}

Outcome criterion3() {
  const auto& s = plain_suite();
  return {s.max_mass_error <= kC3MassTolerance,
          "max |sum estimate - 1| = " + fmt("%.3g", s.max_mass_error) + " over " +
              std::to_string(kC1Graphs * kC1Runs) + " runs"};
}

Outcome criterion4() {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Graph g = synthetic::random_graph(8 + 4 * seed, 3, seed + 40);
    const std::size_t n = g.num_nodes();
    const FeatureMatrix X = synthetic::uniform_features(n, 3, seed + 41, -1.0, 1.0);
    std::vector<double> d(n);
    for (std::size_t v = 0; v < n; ++v) d[v] = g.out_degree(static_cast<NodeId>(v));
    for (double r : {0.0, 0.25, 0.5, 1.0}) {
      for (std::size_t f = 0; f < X.cols(); ++f) {
        std::vector<double> lhs(X.col(f).begin(), X.col(f).end()), rhs(n), next(n);
        for (std::size_t v = 0; v < n; ++v) rhs[v] = std::pow(d[v], 1 - r) * lhs[v];
        for (int l = 1; l <= kC4MaxPower; ++l) {
          // lhs <- D^(r-1) A D^(-r) lhs
          std::fill(next.begin(), next.end(), 0.0);
          for (std::size_t u = 0; u < n; ++u) {
            for (NodeId t : g.out_neighbors(u)) {
              next[t] += std::pow(d[t], r - 1) * std::pow(d[u], -r) * lhs[u];
            }
          }
          lhs = next;
          // rhs <- A D^-1 rhs
          std::fill(next.begin(), next.end(), 0.0);
          for (std::size_t u = 0; u < n; ++u) {
            for (NodeId t : g.out_neighbors(u)) next[t] += rhs[u] / d[u];
          }
          rhs = next;
          for (std::size_t v = 0; v < n; ++v) {
            worst = std::max(worst, std::abs(lhs[v] - std::pow(d[v], r - 1) * rhs[v]));
          }
        }
      }
    }
  }
  return {worst <= kC4Tolerance, "max deviation " + fmt("%.3g", worst) + " for l <= 5, n <= 20"};
}

Outcome criterion5() {
  const std::vector<double> x{0.4, 0.6}, b{0.5, 0.5};
  const std::vector<std::span<const double>> one{b};
  const auto toy = decompose(x, one, 1.0 / 16);
  const bool toy_ok = toy.theta.size() == 1 && toy.theta[0].second == 0.8 &&
                      toy.residual[0] == 0.0 && std::abs(toy.residual[1] - 0.2) <= 1e-16;

  SplitMix64 rng(55);
  double worst = 0.0;
  bool nonneg = true;
  for (std::size_t c = 0; c < kC5Cases; ++c) {
    const std::size_t n = 2 + rng.below(50), nb = 1 + rng.below(8);
    auto simplex = [&](double density) {
      std::vector<double> v(n, 0.0);
      double s = 0;
      for (auto& e : v) {
        if (rng.uniform() < density) s += e = rng.uniform();
      }
      if (s == 0) s = v[rng.below(n)] = 1.0;
      for (auto& e : v) e /= s;
      return v;
    };
    std::vector<std::vector<double>> bases;
    for (std::size_t k = 0; k < nb; ++k) bases.push_back(simplex(0.3 + 0.7 * rng.uniform()));
    auto xc = simplex(0.5 + 0.5 * rng.uniform());
    if (rng.uniform() < 0.5) {
      const auto& pick = bases[rng.below(nb)];
      for (std::size_t v = 0; v < n; ++v) xc[v] = 0.6 * pick[v] + 0.4 * xc[v];
    }
    const std::vector<std::span<const double>> views(bases.begin(), bases.end());
    const auto d = decompose(xc, views, std::pow(2.0, -static_cast<double>(rng.below(6))));
    std::vector<double> rebuilt = d.residual;
    for (auto [k, theta] : d.theta) {
      for (std::size_t v = 0; v < n; ++v) rebuilt[v] += theta * bases[k][v];
    }
    for (std::size_t v = 0; v < n; ++v) {
      worst = std::max(worst, std::abs(rebuilt[v] - xc[v]));
      nonneg = nonneg && d.residual[v] >= 0.0;
    }
  }
  return {toy_ok && nonneg && worst <= kC5Tolerance,
          std::string("toy theta=") + fmt("%.17g", toy.theta.empty() ? -1 : toy.theta[0].second) +
              " x'=(" + fmt("%g", toy.residual[0]) + "," + fmt("%.17g", toy.residual[1]) +
              "); reconstruction error " + fmt("%.3g", worst) + " over " +
              std::to_string(kC5Cases) + " cases"};
}

Outcome criterion6() {
  const Graph g = synthetic::random_graph(200, 8, 61);
  const FeatureMatrix X = synthetic::correlated_features(200, 64, 4, 0.9, 62);
  PushConfig cfg;
  cfg.lambda = kC6Lambda;
  cfg.phi = 0.1;
  cfg.seed = 63;
  PropagateOptions with, without;
  without.reuse = false;
  const auto a = propagate(g, X, cfg, with);
  const auto b = propagate(g, X, cfg, without);
  double diff = 0;
  for (std::size_t k = 0; k < a.embedding.values().size(); ++k) {
    diff += std::abs(a.embedding.values()[k] - b.embedding.values()[k]);
  }
  diff /= static_cast<double>(a.embedding.values().size());

  const auto reuse_suite = run_bound_suite(true);
  const bool ok = diff <= kC6Lambda && reuse_suite.failed_graphs == 0 &&
                  reuse_suite.max_mass_error <= kC3MassTolerance;
  return {ok, "mean |P_reuse - P_noreuse| = " + fmt("%.3g", diff) + " (" +
                  std::to_string(a.bases.size()) + " bases); reuse bound suite " +
                  std::to_string(reuse_suite.satisfied) + "/" + std::to_string(reuse_suite.trials) +
                  ", worst graph rate " + fmt("%.4f", reuse_suite.worst_rate)};
}

// Columns 0..K-1 are bases b_k; column K+k is 0.5 b_k + 0.5 y_k with all
// supports disjoint, so each decomposes with theta_sum = 0.5 exactly.
FeatureMatrix half_overlap_columns(const Graph& g, std::size_t K, std::size_t support,
                                   double conv_r, std::uint64_t seed) {
  const std::size_t n = g.num_nodes();
  SplitMix64 rng(seed);
  std::vector<std::size_t> nodes(n);
  for (std::size_t v = 0; v < n; ++v) nodes[v] = v;
  for (std::size_t i = n; i > 1; --i) std::swap(nodes[i - 1], nodes[rng.below(static_cast<std::uint32_t>(i))]);
  const auto pre = g.degree_powers(1.0 - conv_r);
  auto block = [&](std::size_t j) {
    std::vector<double> w(n, 0.0);
    double s = 0;
    for (std::size_t i = 0; i < support; ++i) s += w[nodes[j * support + i]] = 0.5 + rng.uniform();
    for (auto& v : w) v /= s;
    return w;
  };
  FeatureMatrix X(n, 2 * K);
  for (std::size_t k = 0; k < K; ++k) {
    const auto b = block(2 * k), y = block(2 * k + 1);
    // Raw values whose prescaled, normalized form is b (resp. (b + y) / 2).
    for (std::size_t v = 0; v < n; ++v) {
      X(v, k) = b[v] / pre->values[v];
      X(v, K + k) = 0.5 * (b[v] + y[v]) / pre->values[v];
    }
  }
  return X;
}

Outcome criterion7() {
  const Graph g = synthetic::random_graph(20000, 10, 71);
  PushConfig cfg;
  cfg.lambda = 0.01;
  cfg.phi = 0.1;
  PropagateOptions reuse, plain;
  reuse.reuse_config.gamma = kC7Gamma;
  plain.reuse = false;

  constexpr std::size_t K = 8;
  reuse.reuse_config.num_bases = K;
  double residual_work = 0, plain_work = 0, theta_dev = 0;
  for (std::uint64_t rep = 0; rep < 4; ++rep) {
    cfg.seed = 700 + rep;
    const FeatureMatrix X = half_overlap_columns(g, K, 20, cfg.conv_r, 710 + rep);
    const auto a = propagate(g, X, cfg, reuse);
    const auto b = propagate(g, X, cfg, plain);
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
      if (a.parts[i].column < K) continue;
      theta_dev = std::max(theta_dev, std::abs(a.parts[i].theta_sum - kC7ThetaSum));
      residual_work += static_cast<double>(a.parts[i].work.total());
      plain_work += static_cast<double>(b.parts[i].work.total());
    }
  }
  const double ratio = residual_work / plain_work;
  const double theory = std::sqrt((1 - kC7ThetaSum) / (1 - kC7Gamma * kC7ThetaSum));

  const Graph h = synthetic::random_graph(5000, 10, 72);
  const FeatureMatrix O = synthetic::orthogonal_features(5000, 64, 73);
  PropagateOptions defaults;
  const auto oa = propagate(h, O, cfg, defaults);
  const auto ob = propagate(h, O, cfg, plain);
  double non_base_a = 0, non_base_b = 0;
  for (std::size_t i = 0; i < oa.parts.size(); ++i) {
    if (oa.parts[i].is_base) continue;
    non_base_a += static_cast<double>(oa.parts[i].work.total());
    non_base_b += static_cast<double>(ob.parts[i].work.total());
  }
  const double orth_cols = non_base_a / non_base_b;
  const double orth_total = static_cast<double>(oa.work.total()) / static_cast<double>(ob.work.total());

  const bool ok = theta_dev < 1e-9 && ratio <= kC7MaxRatio &&
                  std::abs(orth_cols - 1.0) <= kC7OrthogonalBand &&
                  std::abs(orth_total - 1.0) <= kC7OrthogonalBand;
  return {ok, "residual/plain work " + fmt("%.3f", ratio) + " (theory " + fmt("%.3f", theory) +
                  ", limit " + fmt("%.2f", kC7MaxRatio) + "); orthogonal ratio columns " +
                  fmt("%.3f", orth_cols) + ", total " + fmt("%.3f", orth_total)};
}

// Each column has `support` non-zeros at random rows.
FeatureMatrix fixed_support_features(std::size_t n, std::size_t F, std::size_t support,
                                     std::uint64_t seed) {
  SplitMix64 rng(seed);
  FeatureMatrix X(n, F);
  for (std::size_t f = 0; f < F; ++f) {
    for (std::size_t i = 0; i < support; ++i) X(rng.below(static_cast<std::uint32_t>(n)), f) = 1.0 - rng.uniform();
  }
  return X;
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

Outcome criterion8() {
  PushConfig cfg;
  cfg.lambda = 0.01;
  cfg.phi = 0.1;
  PropagateOptions plain;
  plain.reuse = false;
  std::vector<double> log_m, log_work;
  std::string sizes;
  for (std::size_t n : {100u, 1000u, 10000u}) {
    double work = 0, m = 0;
    for (std::uint64_t rep = 0; rep < 3; ++rep) {
      const Graph g = synthetic::random_graph(n, 9, 800 + rep + n);
      const FeatureMatrix X = fixed_support_features(n, 16, 10, 810 + rep + n);
      cfg.seed = rep;
      work += static_cast<double>(propagate(g, X, cfg, plain).work.total());
      m += static_cast<double>(g.num_edges());
    }
    log_m.push_back(std::log(m / 3));
    log_work.push_back(std::log(work / 3));
    sizes += (sizes.empty() ? "" : ", ") + fmt("m=%.0f", m / 3);
  }
  const double exponent = slope(log_m, log_work);

  PushConfig fast;
  fast.lambda = 0.1;
  fast.phi = 0.1;
  std::vector<double> per_cell;
  for (std::size_t n : {1000u, 4000u, 16000u}) {
    const Graph g = synthetic::random_graph(n, 9, 820 + n);
    for (std::size_t F : {32u, 64u, 128u}) {
      const FeatureMatrix X = fixed_support_features(n, F, 10, 830 + n + F);
      const auto prop = propagate(g, X, fast, plain);
      per_cell.push_back(static_cast<double>(prop.memory_bytes) / static_cast<double>(n * F));
    }
  }
  double mean = 0;
  for (double v : per_cell) mean += v;
  mean /= static_cast<double>(per_cell.size());
  double spread = 0;
  for (double v : per_cell) spread = std::max(spread, std::abs(v / mean - 1.0));

  const bool ok = exponent >= kC8ExponentLo && exponent <= kC8ExponentHi && spread <= kC8MemoryBand;
  return {ok, "work ~ m^" + fmt("%.3f", exponent) + " over " + sizes + "; memory/(n F) within " +
                  fmt("%.1f%%", 100 * spread) + " of " + fmt("%.1f bytes", mean)};
}

Outcome criterion9() {
  const Graph g = synthetic::random_graph(300, 8, 91);
  const FeatureMatrix X = synthetic::correlated_features(300, 32, 3, 0.8, 92);
  PushConfig cfg;
  cfg.lambda = 0.01;
  cfg.phi = 0.1;
  PropagateOptions opts;
  opts.reuse_config.delta0 = 1.0;
  opts.reuse_config.num_bases = 3;
  const auto prop = propagate(g, X, cfg, opts);
  std::size_t checked = 0, wrong = 0;
  for (const auto& p : prop.parts) {
    if (p.is_base) continue;
    ++checked;
    wrong += p.iterations != 1;
  }
  return {checked > 0 && wrong == 0,
          std::to_string(checked) + " decomposed columns, " + std::to_string(wrong) +
              " with an iteration count other than 1"};
}

double gradient_check(std::uint64_t seed, Task task) {
  SplitMix64 rng(seed);
  const std::size_t F = 2 + rng.below(7), W = 2 + rng.below(7), C = 2 + rng.below(7);
  TrainConfig tc;
  tc.layers = 3;
  tc.width = W;
  tc.task = task;
  tc.seed = seed;
  Model m = init_model(F, C, tc);
  for (auto& l : m.layers) {
    for (Eigen::Index i = 0; i < l.bias.size(); ++i) l.bias(i) = rng.uniform() - 0.5;
  }
  Eigen::MatrixXd X(6, F), T = Eigen::MatrixXd::Zero(6, C);
  for (Eigen::Index i = 0; i < X.size(); ++i) X.data()[i] = 2 * rng.uniform() - 1;
  for (Eigen::Index i = 0; i < 6; ++i) {
    if (task == Task::multi_class) {
      T(i, rng.below(C)) = 1;
    } else {
      for (std::size_t c = 0; c < C; ++c) T(i, c) = rng.uniform() < 0.4;
    }
  }
  Gradients g;
  loss_and_gradients(m, X, T, &g);
  double worst = 0;
  const double h = 1e-6;
  auto probe = [&](double& param, double analytic) {
    const double saved = param;
    param = saved + h;
    const double up = loss_and_gradients(m, X, T, nullptr);
    param = saved - h;
    const double down = loss_and_gradients(m, X, T, nullptr);
    param = saved;
    const double numeric = (up - down) / (2 * h);
    if (std::abs(numeric) < 1e-7 && std::abs(analytic) < 1e-7) return;
    worst = std::max(worst, std::abs(numeric - analytic) /
                                std::max({std::abs(numeric), std::abs(analytic), 1e-6}));
  };
  for (std::size_t l = 0; l < m.layers.size(); ++l) {
    for (Eigen::Index k = 0; k < m.layers[l].weight.size(); ++k) {
      probe(m.layers[l].weight.data()[k], g.weight[l].data()[k]);
    }
    for (Eigen::Index k = 0; k < m.layers[l].bias.size(); ++k) probe(m.layers[l].bias(k), g.bias[l](k));
  }
  return worst;
}

Outcome criterion10() {
  double grad = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    grad = std::max({grad, gradient_check(seed, Task::multi_class),
                     gradient_check(seed + 50, Task::multi_label)});
  }

  // Two blobs, n = 200, trained on the propagated-embedding interface.
  const std::size_t n = 200;
  EmbeddingMatrix P(n, 2);
  LabelSet y;
  y.task = Task::multi_class;
  y.num_nodes = n;
  y.num_classes = 2;
  y.classes.resize(n);
  y.labeled.assign(n, 1);
  SplitMix64 rng(101);
  for (std::size_t v = 0; v < n; ++v) {
    y.classes[v] = static_cast<std::int32_t>(v % 2);
    const double c = v % 2 ? 2.0 : -2.0;
    P(v, 0) = c + (rng.uniform() - 0.5);
    P(v, 1) = c + (rng.uniform() - 0.5);
  }
  random_split(y, 0.6, 0.2, 102);
  TrainConfig tc;
  tc.layers = 2;
  tc.width = 8;
  tc.batch_size = 16;
  tc.max_epochs = 100;
  tc.learning_rate = 0.05;
  tc.seed = 103;
  const Model m1 = train(P, y, tc);
  const double f1 = micro_f1(predict(m1, P), y, y.train);
  std::ostringstream a, b;
  write_model(a, m1);
  write_model(b, train(P, y, tc));
  const bool same = a.str() == b.str();
  return {grad <= kC10GradTolerance && f1 >= kC10MinF1 && same,
          "max gradient relative error " + fmt("%.2g", grad) + "; toy micro-F1 " + fmt("%.4f", f1) +
              "; checkpoints " + (same ? "identical" : "differ")};
}

Outcome criterion11() {
  struct Input {
    Graph g;
    FeatureMatrix X;
  };
  std::vector<Input> inputs;
  inputs.push_back({synthetic::random_graph(500, 8, 111), synthetic::uniform_features(500, 16, 112, -1, 1)});
  inputs.push_back({synthetic::planted_partition(800, 4, 6, 0.8, 113),
                    synthetic::correlated_features(800, 24, 3, 0.9, 114)});
  inputs.push_back({synthetic::random_graph(300, 15, 115), synthetic::sparse_features(300, 40, 0.05, 116)});
  PushConfig cfg;
  cfg.lambda = 1e-3;
  cfg.phi = 0.05;
  cfg.seed = 117;
  std::size_t identical = 0;
  for (const auto& in : inputs) {
    std::string reference;
    bool all = true;
    for (std::size_t threads : {1u, 4u, 8u}) {
      PropagateOptions opts;
      opts.threads = threads;
      std::ostringstream os;
      write_matrix(os, propagate(in.g, in.X, cfg, opts).embedding);
      if (threads == 1) {
        reference = os.str();
      } else {
        all = all && os.str() == reference;
      }
    }
    identical += all;
  }
  return {identical == inputs.size(),
          std::to_string(identical) + "/" + std::to_string(inputs.size()) +
              " inputs byte-identical across 1, 4, 8 threads"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"lambda error bound", criterion1},
      {"unbiasedness", criterion2},
      {"mass conservation", criterion3},
      {"normalization identity", criterion4},
      {"decomposition fidelity", criterion5},
      {"reuse correctness", criterion6},
      {"reuse work reduction", criterion7},
      {"complexity scaling", criterion8},
      {"delta0 semantics", criterion9},
      {"trainer soundness", criterion10},
      {"determinism", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    Stopwatch clock;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %2zu %s: %s | %s [%.1fs]\n", i + 1, criteria[i].first,
                o.pass ? "PASS" : "FAIL", o.detail.c_str(), clock.seconds());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
