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
#include <fstream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "featprop/common.hpp"
#include "featprop/graph.hpp"

namespace featprop {

/**
 * Dense column-major n x F matrix of doubles.
 *
 * Used both for node attributes X and for the embedding P; the two share one
 * on-disk container ("SCMX"), which stores binary32 values.
 */
class ColumnMatrix {
 public:
  ColumnMatrix() = default;
  ColumnMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<double> col(std::size_t f) noexcept { return {values_.data() + f * rows_, rows_}; }
  std::span<const double> col(std::size_t f) const noexcept {
    return {values_.data() + f * rows_, rows_};
  }

  double& operator()(std::size_t row, std::size_t c) noexcept { return values_[c * rows_ + row]; }
  double operator()(std::size_t row, std::size_t c) const noexcept {
    return values_[c * rows_ + row];
  }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  std::size_t memory_bytes() const noexcept { return values_.size() * sizeof(double); }

  friend bool operator==(const ColumnMatrix&, const ColumnMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

using FeatureMatrix = ColumnMatrix;
using EmbeddingMatrix = ColumnMatrix;

/// L1-normalized non-negative distribution plus the mass it was scaled by.
struct NormalizedFeature {
  std::vector<double> weights;
  double scale = 0.0;
  int sign = +1;

  bool is_zero() const noexcept { return scale == 0.0; }
};

struct SignSplit {
  std::vector<double> pos;
  std::vector<double> neg;
};

/// x = pos - neg with pos, neg >= 0 and disjoint supports.
inline SignSplit sign_split(std::span<const double> x) {
  SignSplit out{std::vector<double>(x.size(), 0.0), std::vector<double>(x.size(), 0.0)};
  for (std::size_t i = 0; i < x.size(); ++i) {
    // -0.0 lands in pos so that pos - neg reproduces it bit-exactly.
    if (x[i] >= 0.0) {
      out.pos[i] = x[i];
    } else {
      out.neg[i] = -x[i];
    }
  }
  return out;
}

/// y = x * d^(1-r), then L1-normalize. `dp` must hold exponent 1 - r.
inline NormalizedFeature prescale_normalize(std::span<const double> x, const DegreePowers& dp,
                                            int sign = +1) {
  if (x.size() != dp.values.size()) {
    throw Error(ErrorKind::shape, "feature length " + std::to_string(x.size()) +
                                      " != node count " + std::to_string(dp.values.size()));
  }
  NormalizedFeature out;
  out.sign = sign;
  out.weights.resize(x.size());
  double s = 0.0;
  for (std::size_t v = 0; v < x.size(); ++v) {
    out.weights[v] = x[v] * dp.values[v];
    s += out.weights[v];
  }
  if (s > 0.0) {
    for (auto& w : out.weights) w /= s;
    out.scale = s;
  } else {
    std::fill(out.weights.begin(), out.weights.end(), 0.0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrix container: "SCMX", u32 version, u64 n, u64 F, u8 dtype (1 = f32),
// values column-major, little-endian.

inline constexpr std::uint32_t kMatrixVersion = 1;
inline constexpr std::uint8_t kDtypeFloat32 = 1;

inline void write_matrix(std::ostream& os, const ColumnMatrix& m) {
  detail::write_magic(os, "SCMX");
  detail::write_le<std::uint32_t>(os, kMatrixVersion);
  detail::write_le<std::uint64_t>(os, m.rows());
  detail::write_le<std::uint64_t>(os, m.cols());
  detail::write_le<std::uint8_t>(os, kDtypeFloat32);
  for (double v : m.values()) detail::write_le<float>(os, static_cast<float>(v));
}

inline ColumnMatrix read_matrix(std::istream& is) {
  detail::expect_magic(is, "SCMX");
  auto version = detail::read_le<std::uint32_t>(is, "matrix version");
  if (version != kMatrixVersion) {
    throw Error(ErrorKind::parse, "unsupported matrix version " + std::to_string(version));
  }
  auto n = detail::read_le<std::uint64_t>(is, "row count");
  auto f = detail::read_le<std::uint64_t>(is, "column count");
  auto dtype = detail::read_le<std::uint8_t>(is, "dtype");
  if (dtype != kDtypeFloat32) {
    throw Error(ErrorKind::parse, "unsupported matrix dtype " + std::to_string(dtype));
  }
  if (n == 0 || f == 0 || n > (std::uint64_t{1} << 40) / f) {
    throw Error(ErrorKind::shape, "implausible matrix dimensions " + std::to_string(n) + "x" +
                                      std::to_string(f));
  }
  ColumnMatrix m(n, f);
  for (std::size_t c = 0; c < f; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      float v = detail::read_le<float>(is, "matrix values");
      if (!std::isfinite(v)) {
        throw Error(ErrorKind::parse, "non-finite value at (row " + std::to_string(r) +
                                          ", column " + std::to_string(c) + ")");
      }
      m(r, c) = v;
    }
  }
  return m;
}

inline void save_matrix(const std::string& path, const ColumnMatrix& m) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::io, "cannot write " + path);
  write_matrix(os, m);
  if (!os) throw Error(ErrorKind::io, "write failed for " + path);
}

inline ColumnMatrix load_matrix(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::io, "cannot open " + path);
  return read_matrix(is);
}

inline FeatureMatrix load_features(const std::string& path) { return load_matrix(path); }

/// Rounds every entry through binary32, i.e. what a save/load cycle yields.
inline ColumnMatrix round_to_float(ColumnMatrix m) {
  for (auto& v : m.values()) v = static_cast<float>(v);
  return m;
}

}  // namespace featprop
