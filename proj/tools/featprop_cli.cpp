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
// featprop command-line driver: generate, precompute, verify, train, predict,
// bench. Exit codes: 0 ok, 1 usage or argument error, 2 verification failure,
// 3 I/O or malformed input.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "featprop/featprop.hpp"
#include "featprop/manifest.hpp"
#include "featprop/synthetic.hpp"
#include "featprop/trainer.hpp"
#include "featprop/verify.hpp"

namespace {

using namespace featprop;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitIo = 3;

struct Shared {
  PushConfig push;
  ReuseConfig reuse;
  std::size_t num_bases = 0;
  CLI::Option* num_bases_opt = nullptr;
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  bool symmetrize = true;
  bool no_reuse = false;

  ReuseConfig reuse_config() const {
    ReuseConfig rc = reuse;
    if (num_bases_opt && num_bases_opt->count() > 0) rc.num_bases = num_bases;
    return rc;
  }
};

struct TrainFlags {
  TrainConfig cfg;
  std::string task = "multi-class";
  bool no_bias = false;
  double train_frac = 0.6;
  double val_frac = 0.2;

  Task parsed_task() const { return task == "multi-label" ? Task::multi_label : Task::multi_class; }
};

void add_train_flags(CLI::App* cmd, TrainFlags& t, bool model_shape) {
  cmd->add_option("--task", t.task, "multi-class or multi-label")
      ->check(CLI::IsMember({"multi-class", "multi-label"}));
  cmd->add_option("--train-frac", t.train_frac, "labeled fraction used for training")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--val-frac", t.val_frac, "labeled fraction used for validation")
      ->check(CLI::Range(0.0, 1.0));
  if (!model_shape) return;
  cmd->add_option("--layers", t.cfg.layers, "number of linear layers")->check(CLI::PositiveNumber);
  cmd->add_option("--width", t.cfg.width, "hidden width")->check(CLI::PositiveNumber);
  cmd->add_option("--batch-size", t.cfg.batch_size)->check(CLI::PositiveNumber);
  cmd->add_option("--epochs", t.cfg.max_epochs, "epoch budget");
  cmd->add_option("--lr", t.cfg.learning_rate);
  cmd->add_option("--momentum", t.cfg.momentum);
  cmd->add_option("--patience", t.cfg.patience);
  cmd->add_flag("--no-bias", t.no_bias, "drop layer biases");
}

json push_json(const Shared& s, std::size_t n, std::size_t F) {
  const PushConfig cfg = s.push.resolved(n);
  json j = to_json(cfg);
  j["reuse"] = !s.no_reuse;
  j["reuse_config"] = to_json(s.reuse_config(), F);
  j["beta_s"] = standard_push_coefficient(cfg.lambda, cfg.phi).beta;
  j["symmetrize"] = s.symmetrize;
  return j;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorKind::io, "cannot write " + path);
  os << std::setprecision(10);
  return os;
}

const char* part_name(SignPart p) { return p == SignPart::positive ? "pos" : "neg"; }

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string graph_kind = "random";
  std::string feature_kind = "uniform";
  std::size_t nodes = 1000;
  double degree = 10.0;
  std::size_t features = 32;
  std::size_t classes = 4;
  std::size_t prototypes = 4;
  double homophily = 0.8;
  double rho = 0.9;
  double density = 0.05;
  double noise = 0.5;
  std::string graph_out, features_out, labels_out;
  bool graph_cache = false;
};

int cmd_generate(const Shared& s, const GenerateArgs& a) {
  const std::uint64_t seed = s.push.seed;
  Graph g = a.graph_kind == "partition"
                ? synthetic::planted_partition(a.nodes, a.classes, a.degree, a.homophily, seed)
                : synthetic::random_graph(a.nodes, a.degree, seed);
  FeatureMatrix X;
  const std::uint64_t fseed = mix64(seed + 1);
  if (a.feature_kind == "correlated") {
    X = synthetic::correlated_features(a.nodes, a.features, a.prototypes, a.rho, fseed);
  } else if (a.feature_kind == "orthogonal") {
    X = synthetic::orthogonal_features(a.nodes, a.features, fseed);
  } else if (a.feature_kind == "sparse") {
    X = synthetic::sparse_features(a.nodes, a.features, a.density, fseed);
  } else if (a.feature_kind == "class") {
    X = synthetic::class_features(a.nodes, a.features, a.classes, a.noise, fseed);
  } else {
    X = synthetic::uniform_features(a.nodes, a.features, fseed);
  }
  if (a.graph_cache) {
    save_graph_cache(a.graph_out, g);
  } else {
    auto os = open_out(a.graph_out);
    write_edge_list(os, g);
  }
  save_matrix(a.features_out, X);
  if (!a.labels_out.empty()) {
    auto os = open_out(a.labels_out);
    for (std::size_t v = 0; v < a.nodes; ++v) os << v << ' ' << v % a.classes << '\n';
  }
  std::cout << "generated n=" << g.num_nodes() << " m=" << g.num_edges() << " F=" << X.cols()
            << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct PrecomputeArgs {
  std::string graph, features, out, manifest, report;
};

void write_part_report(const std::string& path, const Propagation& prop) {
  auto os = open_out(path);
  os << "column,part,is_base,theta_sum,iterations,residual_l1,beta,pops,edge_pushes,walks,"
        "walk_steps,work\n";
  for (const auto& p : prop.parts) {
    os << p.column << ',' << part_name(p.part) << ',' << p.is_base << ',' << p.theta_sum << ','
       << p.iterations << ',' << p.residual_l1 << ',' << p.beta << ',' << p.work.pops << ','
       << p.work.edge_pushes << ',' << p.work.walks << ',' << p.work.walk_steps << ','
       << p.work.total() << '\n';
  }
}

int cmd_precompute(const Shared& s, const PrecomputeArgs& a) {
  RunManifest man;
  man.command = "precompute";
  const Graph g = load_graph(a.graph, s.symmetrize);
  const FeatureMatrix X = load_features(a.features);
  man.add_input(a.graph);
  man.add_input(a.features);

  PropagateOptions opts;
  opts.reuse = !s.no_reuse;
  opts.reuse_config = s.reuse_config();
  opts.threads = s.threads;
  Stopwatch clock;
  const Propagation prop = propagate(g, X, s.push, opts);
  man.precompute_seconds = clock.seconds();
  save_matrix(a.out, prop.embedding);

  man.config = push_json(s, g.num_nodes(), X.cols());
  man.peak_memory_bytes = prop.memory_bytes;
  man.seed = s.push.seed;
  man.threads = s.threads;
  man.extra = {{"nodes", g.num_nodes()},
               {"edges", g.num_edges()},
               {"features", X.cols()},
               {"parts", prop.parts.size()},
               {"bases", prop.bases.size()},
               {"work", to_json(prop.work)},
               {"output", a.out}};
  man.save(a.manifest.empty() ? a.out + ".manifest.json" : a.manifest);
  if (!a.report.empty()) write_part_report(a.report, prop);
  std::cout << "precompute: n=" << g.num_nodes() << " m=" << g.num_edges() << " F=" << X.cols()
            << " bases=" << prop.bases.size() << " work=" << prop.work.total() << " time="
            << man.precompute_seconds << "s\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string graph, features, report, manifest;
  std::size_t runs = 100;
  double slack = 3.0;
};

int cmd_verify(const Shared& s, const VerifyArgs& a) {
  const Graph g = load_graph(a.graph, s.symmetrize);
  const FeatureMatrix X = load_features(a.features);
  VerifyOptions vo;
  vo.runs = a.runs;
  vo.threads = s.threads;
  vo.reuse = !s.no_reuse;
  vo.reuse_config = s.reuse_config();
  vo.slack_sigmas = a.slack;
  Stopwatch clock;
  const VerifyReport rep = verify_against_oracle(g, X, s.push, vo);
  const double seconds = clock.seconds();

  if (!a.report.empty()) {
    auto os = open_out(a.report);
    os << "part,column,max_error\n";
    for (std::size_t i = 0; i < rep.part_column.size(); ++i) {
      os << i << ',' << rep.part_column[i] << ',' << rep.part_max_error[i] << '\n';
    }
  }
  const PushConfig cfg = s.push.resolved(g.num_nodes());
  std::cout << std::setprecision(6);
  if (rep.vacuous) {
    std::cout << "verify: vacuous (no oracle entry exceeds delta=" << cfg.delta << ")\n";
  } else {
    std::cout << "verify: " << rep.satisfied << "/" << rep.trials << " runs within lambda="
              << cfg.lambda << " (rate " << rep.satisfaction_rate << ", required "
              << rep.required_rate << ")\n";
  }
  std::cout << "max mass error " << rep.max_mass_error << ", mean |reuse - noreuse| "
            << rep.mean_reuse_difference << "\n";
  std::cout << (rep.passed ? "PASS" : "FAIL") << '\n';

  if (!a.manifest.empty()) {
    RunManifest man;
    man.command = "verify";
    man.add_input(a.graph);
    man.add_input(a.features);
    man.config = push_json(s, g.num_nodes(), X.cols());
    man.config["runs"] = a.runs;
    man.precompute_seconds = seconds;
    man.seed = s.push.seed;
    man.threads = s.threads;
    man.extra = {{"trials", rep.trials},
                 {"satisfied", rep.satisfied},
                 {"satisfaction_rate", rep.satisfaction_rate},
                 {"required_rate", rep.required_rate},
                 {"vacuous", rep.vacuous},
                 {"max_mass_error", rep.max_mass_error},
                 {"mean_reuse_difference", rep.mean_reuse_difference},
                 {"passed", rep.passed}};
    man.save(a.manifest);
  }
  return rep.passed ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------

struct TrainArgs {
  std::string embedding, labels, model, manifest;
  TrainFlags flags;
};

LabelSet split_labels(const std::string& path, std::size_t n, const TrainFlags& f,
                      std::uint64_t seed) {
  LabelSet y = load_labels(path, n, f.parsed_task());
  if (f.train_frac + f.val_frac > 1.0) {
    throw Error(ErrorKind::invalid_argument, "train and validation fractions exceed 1");
  }
  random_split(y, f.train_frac, f.val_frac, seed);
  return y;
}

int cmd_train(const Shared& s, const TrainArgs& a) {
  const EmbeddingMatrix P = load_matrix(a.embedding);
  TrainConfig cfg = a.flags.cfg;
  cfg.task = a.flags.parsed_task();
  cfg.bias = !a.flags.no_bias;
  cfg.seed = s.push.seed;
  const LabelSet y = split_labels(a.labels, P.rows(), a.flags, s.push.seed);

  Stopwatch clock;
  TrainReport rep;
  const Model m = train(P, y, cfg, &rep);
  const double train_seconds = clock.seconds();
  save_model(a.model, m);

  Stopwatch infer;
  const Predictions pred = predict(m, P);
  const double inference_seconds = infer.seconds();
  const double f1_train = micro_f1(pred, y, y.train);
  const double f1_val = y.validation.empty() ? 0.0 : micro_f1(pred, y, y.validation);
  const double f1_test = y.test.empty() ? 0.0 : micro_f1(pred, y, y.test);
  std::cout << "train: epochs=" << rep.epochs_run << " best_epoch=" << rep.best_epoch
            << " micro-F1 train=" << f1_train << " val=" << f1_val << " test=" << f1_test << '\n';

  RunManifest man;
  man.command = "train";
  man.add_input(a.embedding);
  man.add_input(a.labels);
  man.config = to_json(cfg);
  man.config["train_frac"] = a.flags.train_frac;
  man.config["val_frac"] = a.flags.val_frac;
  man.train_seconds = train_seconds;
  man.inference_seconds = inference_seconds;
  std::size_t params = 0;
  for (const auto& l : m.layers) params += l.weight.size() + l.bias.size();
  man.peak_memory_bytes = P.memory_bytes() + 3 * params * sizeof(double);
  man.seed = s.push.seed;
  man.threads = 1;
  man.extra = {{"epochs_run", rep.epochs_run},
               {"best_epoch", rep.best_epoch},
               {"micro_f1", {{"train", f1_train}, {"validation", f1_val}, {"test", f1_test}}},
               {"model", a.model}};
  man.save(a.manifest.empty() ? a.model + ".manifest.json" : a.manifest);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct PredictArgs {
  std::string embedding, model, out, labels, split = "test", manifest;
  TrainFlags flags;
};

int cmd_predict(const Shared& s, const PredictArgs& a) {
  const EmbeddingMatrix P = load_matrix(a.embedding);
  const Model m = load_model(a.model);
  Stopwatch clock;
  const Predictions pred = predict(m, P);
  const double seconds = clock.seconds();

  if (!a.out.empty()) {
    auto os = open_out(a.out);
    for (std::size_t v = 0; v < P.rows(); ++v) {
      os << v << ' ';
      if (m.task == Task::multi_class) {
        os << pred.classes[v];
      } else {
        bool first = true;
        for (std::size_t c = 0; c < m.output_dim(); ++c) {
          if (!predicted(pred, v, c)) continue;
          os << (first ? "" : ",") << c;
          first = false;
        }
      }
      os << '\n';
    }
  }

  json extra = json::object();
  if (!a.labels.empty()) {
    TrainFlags f = a.flags;
    f.task = m.task == Task::multi_label ? "multi-label" : "multi-class";
    const LabelSet y = split_labels(a.labels, P.rows(), f, s.push.seed);
    std::vector<std::size_t> nodes;
    if (a.split == "train") {
      nodes = y.train;
    } else if (a.split == "validation") {
      nodes = y.validation;
    } else if (a.split == "test") {
      nodes = y.test;
    } else {
      nodes = y.labeled_nodes();
    }
    const double f1 = micro_f1(pred, y, nodes);
    std::cout << "predict: micro-F1 (" << a.split << ", " << nodes.size() << " nodes) = " << f1
              << '\n';
    extra["micro_f1"] = f1;
    extra["split"] = a.split;
  }

  if (!a.manifest.empty()) {
    RunManifest man;
    man.command = "predict";
    man.add_input(a.embedding);
    man.add_input(a.model);
    if (!a.labels.empty()) man.add_input(a.labels);
    man.config = {{"task", m.task == Task::multi_label ? "multi-label" : "multi-class"}};
    man.inference_seconds = seconds;
    man.peak_memory_bytes = P.memory_bytes() + pred.scores.size() * sizeof(double);
    man.seed = s.push.seed;
    man.extra = extra;
    man.save(a.manifest);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string feature_kind = "correlated";
  std::vector<std::size_t> nodes{2000};
  double degree = 10.0;
  std::size_t features = 32;
  std::size_t prototypes = 4;
  double rho = 0.9;
  double density = 0.01;
  std::string out, manifest;
};

int cmd_bench(const Shared& s, const BenchArgs& a) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!a.out.empty()) {
    file = open_out(a.out);
    os = &file;
  }
  *os << std::setprecision(8);
  *os << "kind,n,m,F,rho,mode,threads,seconds,pops,edge_pushes,walks,walk_steps,work,bases,"
         "mean_theta_sum,memory_bytes,time_speedup,work_speedup\n";

  json rows = json::array();
  std::vector<double> log_m, log_work;
  for (std::size_t n : a.nodes) {
    const Graph g = synthetic::random_graph(n, a.degree, s.push.seed);
    const std::uint64_t fseed = mix64(s.push.seed + n);
    FeatureMatrix X;
    if (a.feature_kind == "orthogonal") {
      X = synthetic::orthogonal_features(n, a.features, fseed);
    } else if (a.feature_kind == "sparse") {
      X = synthetic::sparse_features(n, a.features, a.density, fseed);
    } else if (a.feature_kind == "uniform") {
      X = synthetic::uniform_features(n, a.features, fseed);
    } else {
      X = synthetic::correlated_features(n, a.features, a.prototypes, a.rho, fseed);
    }

    double base_seconds = 0.0, base_work = 0.0;
    for (bool reuse : {false, true}) {
      PropagateOptions opts;
      opts.reuse = reuse;
      opts.reuse_config = s.reuse_config();
      opts.threads = s.threads;
      Stopwatch clock;
      const Propagation prop = propagate(g, X, s.push, opts);
      const double seconds = clock.seconds();
      double theta = 0.0;
      std::size_t decomposed = 0;
      for (const auto& p : prop.parts) {
        if (p.is_base || !reuse) continue;
        theta += p.theta_sum;
        ++decomposed;
      }
      theta = decomposed ? theta / static_cast<double>(decomposed) : 0.0;
      const double work = static_cast<double>(prop.work.total());
      if (!reuse) {
        base_seconds = seconds;
        base_work = work;
        log_m.push_back(std::log(static_cast<double>(g.num_edges())));
        log_work.push_back(std::log(std::max(work, 1.0)));
      }
      const double time_speedup = reuse && seconds > 0 ? base_seconds / seconds : 1.0;
      const double work_speedup = reuse && work > 0 ? base_work / work : 1.0;
      *os << a.feature_kind << ',' << n << ',' << g.num_edges() << ',' << X.cols() << ','
          << a.rho << ',' << (reuse ? "reuse" : "push") << ',' << s.threads << ',' << seconds
          << ',' << prop.work.pops << ',' << prop.work.edge_pushes << ',' << prop.work.walks << ','
          << prop.work.walk_steps << ',' << prop.work.total() << ',' << prop.bases.size() << ','
          << theta << ',' << prop.memory_bytes << ',' << time_speedup << ',' << work_speedup
          << '\n';
      rows.push_back({{"n", n},
                      {"m", g.num_edges()},
                      {"mode", reuse ? "reuse" : "push"},
                      {"seconds", seconds},
                      {"work", to_json(prop.work)},
                      {"mean_theta_sum", theta}});
    }
  }

  json extra = {{"rows", rows}};
  if (log_m.size() >= 2) {
    // Least-squares slope of log(work) on log(m).
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < log_m.size(); ++i) {
      mx += log_m[i];
      my += log_work[i];
    }
    mx /= static_cast<double>(log_m.size());
    my /= static_cast<double>(log_m.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < log_m.size(); ++i) {
      sxy += (log_m[i] - mx) * (log_work[i] - my);
      sxx += (log_m[i] - mx) * (log_m[i] - mx);
    }
    const double slope = sxx > 0 ? sxy / sxx : 0.0;
    extra["work_exponent_in_m"] = slope;
    std::cerr << "fitted work exponent in m: " << slope << '\n';
  }
  if (!a.manifest.empty()) {
    RunManifest man;
    man.command = "bench";
    man.config = push_json(s, a.nodes.front(), a.features);
    man.config["generator"] = {{"kind", a.feature_kind}, {"nodes", a.nodes},
                               {"degree", a.degree},     {"features", a.features},
                               {"prototypes", a.prototypes}, {"rho", a.rho},
                               {"density", a.density}};
    man.seed = s.push.seed;
    man.threads = s.threads;
    man.extra = extra;
    man.save(a.manifest);
  }
  return kExitOk;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::io:
    case ErrorKind::parse:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate feature propagation for decoupled graph learning"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file; command-line flags take precedence");

  Shared s;
  app.add_option("--alpha", s.push.alpha, "teleport probability")->check(CLI::Range(0.0, 1.0));
  app.add_option("--conv-r", s.push.conv_r, "convolution coefficient r")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--lambda", s.push.lambda, "absolute error bound");
  app.add_option("--phi", s.push.phi, "failure probability (default 1/n)");
  app.add_option("--delta", s.push.delta, "significance threshold (default 1/n)");
  app.add_option("--gamma", s.reuse.gamma, "base precision factor");
  s.num_bases_opt =
      app.add_option("--num-bases", s.num_bases, "number of base columns (default ceil(0.02 F))");
  app.add_option("--delta0", s.reuse.delta0, "decomposition threshold");
  app.add_option("--sample-rows", s.reuse.sample_rows, "rows sampled for base selection (0 = all)");
  app.add_option("--seed", s.push.seed);
  app.add_option("--threads", s.threads)->check(CLI::PositiveNumber);
  app.add_flag("--symmetrize,!--no-symmetrize", s.symmetrize, "treat edges as undirected");
  app.add_flag("--no-reuse", s.no_reuse, "push every column independently");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write a synthetic graph, features and labels");
  generate->add_option("--graph-kind", gen.graph_kind)
      ->check(CLI::IsMember({"random", "partition"}));
  generate->add_option("--feature-kind", gen.feature_kind)
      ->check(CLI::IsMember({"uniform", "correlated", "orthogonal", "sparse", "class"}));
  generate->add_option("--nodes", gen.nodes)->check(CLI::PositiveNumber);
  generate->add_option("--degree", gen.degree);
  generate->add_option("--features", gen.features)->check(CLI::PositiveNumber);
  generate->add_option("--classes", gen.classes)->check(CLI::PositiveNumber);
  generate->add_option("--prototypes", gen.prototypes)->check(CLI::PositiveNumber);
  generate->add_option("--homophily", gen.homophily);
  generate->add_option("--rho", gen.rho);
  generate->add_option("--density", gen.density);
  generate->add_option("--noise", gen.noise);
  generate->add_option("--graph-out", gen.graph_out)->required();
  generate->add_option("--features-out", gen.features_out)->required();
  generate->add_option("--labels-out", gen.labels_out);
  generate->add_flag("--graph-cache", gen.graph_cache, "write the binary CSR cache");

  PrecomputeArgs pre;
  auto* precompute = app.add_subcommand("precompute", "compute the propagated embedding");
  precompute->add_option("--graph", pre.graph)->required();
  precompute->add_option("--features", pre.features)->required();
  precompute->add_option("--out", pre.out)->required();
  precompute->add_option("--manifest", pre.manifest, "default: <out>.manifest.json");
  precompute->add_option("--report", pre.report, "per-part CSV report");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "compare against the exact oracle");
  verify->add_option("--graph", ver.graph)->required();
  verify->add_option("--features", ver.features)->required();
  verify->add_option("--runs", ver.runs)->check(CLI::PositiveNumber);
  verify->add_option("--slack-sigmas", ver.slack);
  verify->add_option("--report", ver.report, "per-part CSV report");
  verify->add_option("--manifest", ver.manifest);

  TrainArgs tr;
  auto* train_cmd = app.add_subcommand("train", "fit the feed-forward classifier");
  train_cmd->add_option("--embedding", tr.embedding)->required();
  train_cmd->add_option("--labels", tr.labels)->required();
  train_cmd->add_option("--model", tr.model)->required();
  train_cmd->add_option("--manifest", tr.manifest, "default: <model>.manifest.json");
  add_train_flags(train_cmd, tr.flags, true);

  PredictArgs pr;
  auto* predict_cmd = app.add_subcommand("predict", "apply a trained model");
  predict_cmd->add_option("--embedding", pr.embedding)->required();
  predict_cmd->add_option("--model", pr.model)->required();
  predict_cmd->add_option("--out", pr.out, "predictions text file");
  predict_cmd->add_option("--labels", pr.labels, "score against these labels");
  predict_cmd->add_option("--split", pr.split)
      ->check(CLI::IsMember({"train", "validation", "test", "all"}));
  predict_cmd->add_option("--manifest", pr.manifest);
  add_train_flags(predict_cmd, pr.flags, false);

  BenchArgs be;
  auto* bench = app.add_subcommand("bench", "time push with and without reuse");
  bench->add_option("--feature-kind", be.feature_kind)
      ->check(CLI::IsMember({"correlated", "orthogonal", "sparse", "uniform"}));
  bench->add_option("--nodes", be.nodes, "one or more node counts")->expected(1, -1);
  bench->add_option("--degree", be.degree);
  bench->add_option("--features", be.features)->check(CLI::PositiveNumber);
  bench->add_option("--prototypes", be.prototypes)->check(CLI::PositiveNumber);
  bench->add_option("--rho", be.rho);
  bench->add_option("--density", be.density);
  bench->add_option("--out", be.out, "CSV output (default stdout)");
  bench->add_option("--manifest", be.manifest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    (void)s.push.resolved(2);
    s.reuse.validate();
    if (*generate) return cmd_generate(s, gen);
    if (*precompute) return cmd_precompute(s, pre);
    if (*verify) return cmd_verify(s, ver);
    if (*train_cmd) return cmd_train(s, tr);
    if (*predict_cmd) return cmd_predict(s, pr);
    if (*bench) return cmd_bench(s, be);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
