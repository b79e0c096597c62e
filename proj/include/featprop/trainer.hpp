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

#include <Eigen/Dense>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "featprop/common.hpp"
#include "featprop/features.hpp"
#include "featprop/rng.hpp"

namespace featprop {

enum class Task : std::uint8_t { multi_class = 0, multi_label = 1 };

/// Feed-forward trainer settings. Optimizer: SGD with momentum.
struct TrainConfig {
  std::size_t layers = 3;
  std::size_t width = 128;
  std::size_t batch_size = 64;
  std::size_t max_epochs = 1000;
  double learning_rate = 0.01;
  double momentum = 0.9;
  std::size_t patience = 50;
  std::uint64_t seed = 0;
  Task task = Task::multi_class;
  bool bias = true;

  void validate() const {
    if (layers < 1) throw Error(ErrorKind::invalid_argument, "layers must be >= 1");
    if (width < 1 || batch_size < 1) {
      throw Error(ErrorKind::invalid_argument, "width and batch size must be >= 1");
    }
    if (!(learning_rate > 0.0) || !(momentum >= 0.0 && momentum < 1.0)) {
      throw Error(ErrorKind::invalid_argument, "bad learning rate or momentum");
    }
  }
};

struct Layer {
  Eigen::MatrixXd weight;  // in x out
  Eigen::VectorXd bias;    // out
};

struct Model {
  Task task = Task::multi_class;
  bool has_bias = true;
  std::vector<Layer> layers;

  std::size_t input_dim() const { return layers.empty() ? 0 : layers.front().weight.rows(); }
  std::size_t output_dim() const { return layers.empty() ? 0 : layers.back().weight.cols(); }
};

/**
 * Node labels plus train/validation/test splits.
 *
 * Multi-class: classes[v] in [0, num_classes) or -1 when unlabeled.
 * Multi-label: targets is num_nodes x num_classes, row-major 0/1 bytes, and
 * labeled[v] marks nodes that appeared in the labels file.
 */
struct LabelSet {
  Task task = Task::multi_class;
  std::size_t num_nodes = 0;
  std::size_t num_classes = 0;
  std::vector<std::int32_t> classes;
  std::vector<std::uint8_t> targets;
  std::vector<std::uint8_t> labeled;
  std::vector<std::size_t> train, validation, test;

  bool has_label(std::size_t v) const { return labeled[v] != 0; }
  bool target(std::size_t v, std::size_t c) const {
    return task == Task::multi_class ? classes[v] == static_cast<std::int32_t>(c)
                                     : targets[v * num_classes + c] != 0;
  }

  std::vector<std::size_t> labeled_nodes() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < num_nodes; ++v) {
      if (labeled[v]) out.push_back(v);
    }
    return out;
  }

  void validate() const {
    std::vector<std::uint8_t> seen(num_nodes, 0);
    for (const auto* split : {&train, &validation, &test}) {
      for (std::size_t v : *split) {
        if (v >= num_nodes || !labeled[v]) {
          throw Error(ErrorKind::invalid_argument, "split references unlabeled node");
        }
        if (seen[v]++) throw Error(ErrorKind::invalid_argument, "splits are not disjoint");
      }
    }
  }
};

/// Shuffles the labeled nodes with `seed` and cuts train/validation/test.
inline void random_split(LabelSet& y, double train_frac, double val_frac, std::uint64_t seed) {
  auto nodes = y.labeled_nodes();
  SplitMix64 rng(seed);
  for (std::size_t i = nodes.size(); i > 1; --i) {
    std::swap(nodes[i - 1], nodes[rng.below(static_cast<std::uint32_t>(i))]);
  }
  const auto n_train = static_cast<std::size_t>(std::llround(train_frac * nodes.size()));
  const auto n_val = std::min(nodes.size() - n_train,
                              static_cast<std::size_t>(std::llround(val_frac * nodes.size())));
  y.train.assign(nodes.begin(), nodes.begin() + n_train);
  y.validation.assign(nodes.begin() + n_train, nodes.begin() + n_train + n_val);
  y.test.assign(nodes.begin() + n_train + n_val, nodes.end());
  std::sort(y.train.begin(), y.train.end());
  std::sort(y.validation.begin(), y.validation.end());
  std::sort(y.test.begin(), y.test.end());
}

// ---------------------------------------------------------------------------
// Labels text format: "node_id class_id" or "node_id c1,c2,...".

inline LabelSet parse_labels(std::istream& in, std::size_t num_nodes, Task task) {
  LabelSet y;
  y.task = task;
  y.num_nodes = num_nodes;
  y.labeled.assign(num_nodes, 0);
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> rows;
  std::uint32_t max_class = 0;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::parse, "labels line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string node_tok, class_tok, extra;
    if (!(ls >> node_tok)) continue;
    if (node_tok.front() == '#') continue;
    if (!(ls >> class_tok) || (ls >> extra)) fail("expected \"node_id class[,class...]\"");
    std::size_t node = 0;
    auto [p, ec] = std::from_chars(node_tok.data(), node_tok.data() + node_tok.size(), node);
    if (ec != std::errc() || p != node_tok.data() + node_tok.size()) fail("bad node id");
    if (node >= num_nodes) fail("node id " + node_tok + " >= node count");
    std::vector<std::uint32_t> ids;
    std::string_view rest(class_tok);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      auto tok = rest.substr(0, comma);
      std::uint32_t c = 0;
      auto [q, ec2] = std::from_chars(tok.data(), tok.data() + tok.size(), c);
      if (ec2 != std::errc() || q != tok.data() + tok.size()) fail("bad class id");
      ids.push_back(c);
      max_class = std::max(max_class, c);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (task == Task::multi_class && ids.size() != 1) fail("multi-class labels take one class");
    rows.emplace_back(node, std::move(ids));
  }
  if (rows.empty()) throw Error(ErrorKind::parse, "labels file is empty");
  y.num_classes = max_class + 1;
  if (task == Task::multi_class) {
    y.classes.assign(num_nodes, -1);
  } else {
    y.targets.assign(num_nodes * y.num_classes, 0);
  }
  for (const auto& [node, ids] : rows) {
    y.labeled[node] = 1;
    if (task == Task::multi_class) {
      y.classes[node] = static_cast<std::int32_t>(ids.front());
    } else {
      for (auto c : ids) y.targets[node * y.num_classes + c] = 1;
    }
  }
  return y;
}

inline LabelSet load_labels(const std::string& path, std::size_t num_nodes, Task task) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open labels " + path);
  return parse_labels(in, num_nodes, task);
}

inline void write_labels(std::ostream& os, const LabelSet& y) {
  for (std::size_t v = 0; v < y.num_nodes; ++v) {
    if (!y.labeled[v]) continue;
    os << v << ' ';
    if (y.task == Task::multi_class) {
      os << y.classes[v];
    } else {
      bool first = true;
      for (std::size_t c = 0; c < y.num_classes; ++c) {
        if (!y.target(v, c)) continue;
        os << (first ? "" : ",") << c;
        first = false;
      }
    }
    os << '\n';
  }
}

// ---------------------------------------------------------------------------

inline Model init_model(std::size_t input_dim, std::size_t output_dim, const TrainConfig& cfg) {
  cfg.validate();
  Model m;
  m.task = cfg.task;
  m.has_bias = cfg.bias;
  SplitMix64 rng(mix64(cfg.seed ^ 0x1a7e55ULL));
  std::size_t in = input_dim;
  for (std::size_t l = 0; l < cfg.layers; ++l) {
    const std::size_t out = l + 1 == cfg.layers ? output_dim : cfg.width;
    const double limit = std::sqrt(6.0 / static_cast<double>(in + out));
    Layer layer{Eigen::MatrixXd(in, out), Eigen::VectorXd::Zero(out)};
    for (Eigen::Index j = 0; j < layer.weight.cols(); ++j) {
      for (Eigen::Index i = 0; i < layer.weight.rows(); ++i) {
        layer.weight(i, j) = limit * (2.0 * rng.uniform() - 1.0);
      }
    }
    m.layers.push_back(std::move(layer));
    in = out;
  }
  return m;
}

inline Eigen::MatrixXd gather_rows(const ColumnMatrix& P, std::span<const std::size_t> rows) {
  Eigen::MatrixXd X(rows.size(), P.cols());
  for (std::size_t c = 0; c < P.cols(); ++c) {
    const auto col = P.col(c);
    for (std::size_t i = 0; i < rows.size(); ++i) X(i, c) = col[rows[i]];
  }
  return X;
}

/// 0/1 target matrix for `rows` (one-hot for multi-class).
inline Eigen::MatrixXd target_matrix(const LabelSet& y, std::span<const std::size_t> rows) {
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(rows.size(), y.num_classes);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < y.num_classes; ++c) T(i, c) = y.target(rows[i], c) ? 1.0 : 0.0;
  }
  return T;
}

/// Row-wise softmax; rows sum to 1.
inline Eigen::MatrixXd softmax_rows(const Eigen::MatrixXd& logits) {
  Eigen::MatrixXd out(logits.rows(), logits.cols());
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const double mx = logits.row(i).maxCoeff();
    out.row(i) = (logits.row(i).array() - mx).exp();
    out.row(i) /= out.row(i).sum();
  }
  return out;
}

inline Eigen::MatrixXd sigmoid(const Eigen::MatrixXd& z) {
  return z.unaryExpr([](double v) {
    return v >= 0 ? 1.0 / (1.0 + std::exp(-v)) : std::exp(v) / (1.0 + std::exp(v));
  });
}

/// Logits of a batch. Hidden layers use ReLU.
inline Eigen::MatrixXd forward(const Model& m, const Eigen::MatrixXd& X) {
  Eigen::MatrixXd H = X;
  for (std::size_t l = 0; l < m.layers.size(); ++l) {
    Eigen::MatrixXd Z = H * m.layers[l].weight;
    if (m.has_bias) Z.rowwise() += m.layers[l].bias.transpose();
    if (l + 1 < m.layers.size()) Z = Z.cwiseMax(0.0);
    H = std::move(Z);
  }
  return H;
}

struct Gradients {
  std::vector<Eigen::MatrixXd> weight;
  std::vector<Eigen::VectorXd> bias;
};

/**
 * Mean loss over the batch and its gradient. Multi-class uses softmax cross
 * entropy; multi-label sums per-class logistic losses.
 */
inline double loss_and_gradients(const Model& m, const Eigen::MatrixXd& X,
                                 const Eigen::MatrixXd& T, Gradients* grads) {
  const std::size_t L = m.layers.size();
  const double b = static_cast<double>(X.rows());
  std::vector<Eigen::MatrixXd> inputs(L), pre(L);
  Eigen::MatrixXd H = X;
  for (std::size_t l = 0; l < L; ++l) {
    inputs[l] = H;
    Eigen::MatrixXd Z = H * m.layers[l].weight;
    if (m.has_bias) Z.rowwise() += m.layers[l].bias.transpose();
    pre[l] = Z;
    H = l + 1 < L ? Eigen::MatrixXd(Z.cwiseMax(0.0)) : Z;
  }

  double loss = 0.0;
  Eigen::MatrixXd dZ;
  if (m.task == Task::multi_class) {
    for (Eigen::Index i = 0; i < H.rows(); ++i) {
      const double mx = H.row(i).maxCoeff();
      const double lse = mx + std::log((H.row(i).array() - mx).exp().sum());
      loss -= (T.row(i).array() * (H.row(i).array() - lse)).sum();
    }
    dZ = (softmax_rows(H) - T) / b;
  } else {
    // log(1 + e^z) - t z, computed stably.
    for (Eigen::Index i = 0; i < H.rows(); ++i) {
      for (Eigen::Index c = 0; c < H.cols(); ++c) {
        const double z = H(i, c);
        loss += std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))) - T(i, c) * z;
      }
    }
    dZ = (sigmoid(H) - T) / b;
  }
  loss /= b;

  if (grads) {
    grads->weight.resize(L);
    grads->bias.resize(L);
    for (std::size_t l = L; l-- > 0;) {
      grads->weight[l] = inputs[l].transpose() * dZ;
      grads->bias[l] = m.has_bias ? Eigen::VectorXd(dZ.colwise().sum().transpose())
                                  : Eigen::VectorXd::Zero(dZ.cols());
      if (l > 0) {
        Eigen::MatrixXd dH = dZ * m.layers[l].weight.transpose();
        dZ = dH.cwiseProduct((pre[l - 1].array() > 0.0).cast<double>().matrix());
      }
    }
  }
  return loss;
}

struct Predictions {
  Task task = Task::multi_class;
  std::vector<std::int32_t> classes;  // multi-class
  Eigen::MatrixXd scores;             // per-class probabilities, nodes x classes
};

/**
 * Forward pass row by row, so results are bitwise independent of
 * `batch_size`. Multi-class picks the argmax (ties to the lowest class id);
 * multi-label thresholds probabilities at 0.5.
 */
inline Predictions predict(const Model& m, const ColumnMatrix& P, std::size_t batch_size = 1024) {
  if (P.cols() != m.input_dim()) {
    throw Error(ErrorKind::shape, "embedding has " + std::to_string(P.cols()) +
                                      " columns but model expects " +
                                      std::to_string(m.input_dim()));
  }
  Predictions out;
  out.task = m.task;
  out.scores.resize(P.rows(), m.output_dim());
  if (m.task == Task::multi_class) out.classes.assign(P.rows(), 0);
  batch_size = std::max<std::size_t>(batch_size, 1);
  Eigen::RowVectorXd h;
  for (std::size_t start = 0; start < P.rows(); start += batch_size) {
    const std::size_t stop = std::min(P.rows(), start + batch_size);
    for (std::size_t v = start; v < stop; ++v) {
      h.resize(P.cols());
      for (std::size_t c = 0; c < P.cols(); ++c) h(c) = P(v, c);
      for (std::size_t l = 0; l < m.layers.size(); ++l) {
        Eigen::RowVectorXd z = h * m.layers[l].weight;
        if (m.has_bias) z += m.layers[l].bias.transpose();
        h = l + 1 < m.layers.size() ? Eigen::RowVectorXd(z.cwiseMax(0.0)) : z;
      }
      if (m.task == Task::multi_class) {
        Eigen::Index best = 0;
        for (Eigen::Index c = 1; c < h.size(); ++c) {
          if (h(c) > h(best)) best = c;
        }
        out.classes[v] = static_cast<std::int32_t>(best);
        out.scores.row(v) = softmax_rows(h);
      } else {
        out.scores.row(v) = sigmoid(h);
      }
    }
  }
  return out;
}

inline bool predicted(const Predictions& p, std::size_t v, std::size_t c) {
  return p.task == Task::multi_class ? p.classes[v] == static_cast<std::int32_t>(c)
                                     : p.scores(v, c) >= 0.5;
}

struct F1Counts {
  std::uint64_t tp = 0, fp = 0, fn = 0;
};

/// Micro F1 from pooled counts; 0 (with a warning) when undefined.
inline double micro_f1(const F1Counts& k) {
  const std::uint64_t denom = 2 * k.tp + k.fp + k.fn;
  if (denom == 0 || k.tp == 0) {
    if (denom == 0) std::clog << "warning: micro-F1 undefined (no positives), reporting 0\n";
    return 0.0;
  }
  return 2.0 * static_cast<double>(k.tp) / static_cast<double>(denom);
}

/// Micro F1 over `nodes`, pooling every (node, class) decision.
inline double micro_f1(const Predictions& pred, const LabelSet& truth,
                       std::span<const std::size_t> nodes) {
  if (static_cast<std::size_t>(pred.scores.rows()) != truth.num_nodes) {
    throw Error(ErrorKind::shape, "prediction and label node counts differ");
  }
  F1Counts k;
  const std::size_t classes =
      std::max<std::size_t>(truth.num_classes, static_cast<std::size_t>(pred.scores.cols()));
  for (std::size_t v : nodes) {
    for (std::size_t c = 0; c < classes; ++c) {
      const bool p = c < static_cast<std::size_t>(pred.scores.cols()) && predicted(pred, v, c);
      const bool t = c < truth.num_classes && truth.target(v, c);
      k.tp += p && t;
      k.fp += p && !t;
      k.fn += !p && t;
    }
  }
  return micro_f1(k);
}

struct TrainReport {
  std::size_t epochs_run = 0;
  std::size_t best_epoch = 0;
  double best_validation_f1 = 0.0;
  std::vector<double> epoch_loss;  // mean training loss per epoch
};

/**
 * Mini-batch SGD with momentum on `y.train`. Keeps the snapshot with the best
 * validation micro-F1 (or lowest training loss without a validation split)
 * and stops after `patience` epochs without improvement.
 */
inline Model train(const ColumnMatrix& P, const LabelSet& y, const TrainConfig& cfg,
                   TrainReport* report = nullptr) {
  cfg.validate();
  if (P.rows() != y.num_nodes) {
    throw Error(ErrorKind::shape, "embedding rows " + std::to_string(P.rows()) +
                                      " != label node count " + std::to_string(y.num_nodes));
  }
  if (y.train.empty()) throw Error(ErrorKind::invalid_argument, "empty training split");
  if (y.task != cfg.task) throw Error(ErrorKind::invalid_argument, "label/config task mismatch");
  y.validate();

  Model model = init_model(P.cols(), y.num_classes, cfg);
  Model best = model;
  TrainReport local;
  TrainReport& rep = report ? *report : local;
  rep = TrainReport{};

  std::vector<Layer> velocity;
  for (const auto& layer : model.layers) {
    velocity.push_back({Eigen::MatrixXd::Zero(layer.weight.rows(), layer.weight.cols()),
                        Eigen::VectorXd::Zero(layer.bias.size())});
  }
  const bool use_val = !y.validation.empty();
  double best_score = use_val ? micro_f1(predict(model, P), y, y.validation)
                              : -std::numeric_limits<double>::infinity();
  rep.best_validation_f1 = use_val ? best_score : 0.0;

  std::vector<std::size_t> order(y.train.begin(), y.train.end());
  SplitMix64 rng(mix64(cfg.seed ^ 0xba7c4ULL));
  std::size_t since_best = 0;
  Gradients g;
  for (std::size_t epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.below(static_cast<std::uint32_t>(i))]);
    }
    double loss_sum = 0.0;
    for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
      const std::size_t stop = std::min(order.size(), start + cfg.batch_size);
      std::span<const std::size_t> rows(order.data() + start, stop - start);
      const auto X = gather_rows(P, rows);
      const auto T = target_matrix(y, rows);
      loss_sum += loss_and_gradients(model, X, T, &g) * static_cast<double>(rows.size());
      for (std::size_t l = 0; l < model.layers.size(); ++l) {
        velocity[l].weight = cfg.momentum * velocity[l].weight - cfg.learning_rate * g.weight[l];
        model.layers[l].weight += velocity[l].weight;
        if (model.has_bias) {
          velocity[l].bias = cfg.momentum * velocity[l].bias - cfg.learning_rate * g.bias[l];
          model.layers[l].bias += velocity[l].bias;
        }
      }
    }
    const double epoch_loss = loss_sum / static_cast<double>(order.size());
    rep.epoch_loss.push_back(epoch_loss);
    rep.epochs_run = epoch + 1;
    const double score = use_val ? micro_f1(predict(model, P), y, y.validation) : -epoch_loss;
    if (score > best_score) {
      best_score = score;
      best = model;
      rep.best_epoch = epoch + 1;
      if (use_val) rep.best_validation_f1 = score;
      since_best = 0;
    } else if (++since_best >= cfg.patience) {
      break;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Checkpoint: "SCML", u32 version, u8 task, u8 has_bias, u32 layer count L,
// (L+1) x u64 dims, then per layer the in x out weights row-major as f32
// followed by `out` f32 biases when has_bias. Little-endian throughout.

inline constexpr std::uint32_t kModelVersion = 1;

inline void write_model(std::ostream& os, const Model& m) {
  detail::write_magic(os, "SCML");
  detail::write_le<std::uint32_t>(os, kModelVersion);
  detail::write_le<std::uint8_t>(os, static_cast<std::uint8_t>(m.task));
  detail::write_le<std::uint8_t>(os, m.has_bias ? 1 : 0);
  detail::write_le<std::uint32_t>(os, static_cast<std::uint32_t>(m.layers.size()));
  detail::write_le<std::uint64_t>(os, m.input_dim());
  for (const auto& layer : m.layers) detail::write_le<std::uint64_t>(os, layer.weight.cols());
  for (const auto& layer : m.layers) {
    for (Eigen::Index i = 0; i < layer.weight.rows(); ++i) {
      for (Eigen::Index j = 0; j < layer.weight.cols(); ++j) {
        detail::write_le<float>(os, static_cast<float>(layer.weight(i, j)));
      }
    }
    if (m.has_bias) {
      for (Eigen::Index j = 0; j < layer.bias.size(); ++j) {
        detail::write_le<float>(os, static_cast<float>(layer.bias(j)));
      }
    }
  }
}

inline Model read_model(std::istream& is) {
  detail::expect_magic(is, "SCML");
  const auto version = detail::read_le<std::uint32_t>(is, "model version");
  if (version != kModelVersion) {
    throw Error(ErrorKind::parse, "unsupported model version " + std::to_string(version));
  }
  Model m;
  const auto task = detail::read_le<std::uint8_t>(is, "task");
  if (task > 1) throw Error(ErrorKind::parse, "unknown task tag");
  m.task = static_cast<Task>(task);
  m.has_bias = detail::read_le<std::uint8_t>(is, "bias flag") != 0;
  const auto L = detail::read_le<std::uint32_t>(is, "layer count");
  if (L == 0 || L > 1024) throw Error(ErrorKind::parse, "implausible layer count");
  std::vector<std::uint64_t> dims(L + 1);
  for (auto& d : dims) {
    d = detail::read_le<std::uint64_t>(is, "layer dims");
    if (d == 0 || d > (1u << 24)) throw Error(ErrorKind::parse, "implausible layer width");
  }
  for (std::uint32_t l = 0; l < L; ++l) {
    Layer layer{Eigen::MatrixXd(dims[l], dims[l + 1]), Eigen::VectorXd::Zero(dims[l + 1])};
    for (Eigen::Index i = 0; i < layer.weight.rows(); ++i) {
      for (Eigen::Index j = 0; j < layer.weight.cols(); ++j) {
        layer.weight(i, j) = detail::read_le<float>(is, "weights");
      }
    }
    if (m.has_bias) {
      for (Eigen::Index j = 0; j < layer.bias.size(); ++j) {
        layer.bias(j) = detail::read_le<float>(is, "biases");
      }
    }
    m.layers.push_back(std::move(layer));
  }
  return m;
}

inline void save_model(const std::string& path, const Model& m) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::io, "cannot write " + path);
  write_model(os, m);
  if (!os) throw Error(ErrorKind::io, "write failed for " + path);
}

inline Model load_model(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::io, "cannot open " + path);
  return read_model(is);
}

}  // namespace featprop
