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

#include <openssl/evp.h>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <string>

#include "json.hpp"

#include "featprop/common.hpp"
#include "featprop/propagate.hpp"
#include "featprop/trainer.hpp"

namespace featprop {

/// Hex SHA-256 of a file's bytes.
inline std::string file_sha256(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path + " for hashing");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::internal, "SHA-256 initialization failed");
  }
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline nlohmann::json to_json(const PushConfig& c) {
  return {{"alpha", c.alpha}, {"conv_r", c.conv_r}, {"lambda", c.lambda},
          {"phi", c.phi},     {"delta", c.delta},   {"seed", c.seed}};
}

inline nlohmann::json to_json(const ReuseConfig& c, std::size_t num_features) {
  return {{"num_bases", c.bases_for(num_features)},
          {"gamma", c.gamma},
          {"delta0", c.delta0},
          {"sample_rows", c.sample_rows}};
}

inline nlohmann::json to_json(const TrainConfig& c) {
  return {{"layers", c.layers},
          {"width", c.width},
          {"batch_size", c.batch_size},
          {"max_epochs", c.max_epochs},
          {"learning_rate", c.learning_rate},
          {"momentum", c.momentum},
          {"patience", c.patience},
          {"seed", c.seed},
          {"task", c.task == Task::multi_class ? "multi-class" : "multi-label"},
          {"bias", c.bias}};
}

inline nlohmann::json to_json(const WorkCounters& w) {
  return {{"pops", w.pops},
          {"edge_pushes", w.edge_pushes},
          {"walks", w.walks},
          {"walk_steps", w.walk_steps},
          {"total", w.total()}};
}

/**
 * Everything needed to reproduce and audit a run. Phases that a command does
 * not execute are recorded as 0 seconds.
 */
struct RunManifest {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::map<std::string, std::string> input_digests;  // path -> sha256
  double precompute_seconds = 0.0;
  double train_seconds = 0.0;
  double inference_seconds = 0.0;
  std::size_t peak_memory_bytes = 0;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  nlohmann::json extra = nlohmann::json::object();

  void add_input(const std::string& path) { input_digests[path] = file_sha256(path); }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["config"] = config;
    j["inputs"] = input_digests;
    j["timings_seconds"] = {{"precompute", precompute_seconds},
                            {"train", train_seconds},
                            {"inference", inference_seconds}};
    j["peak_memory_bytes_estimate"] = peak_memory_bytes;
    j["seed"] = seed;
    j["threads"] = threads;
    j["details"] = extra;
    return j;
  }

  void save(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw Error(ErrorKind::io, "cannot write manifest " + path);
    os << to_json().dump(2) << '\n';
  }
};

}  // namespace featprop
