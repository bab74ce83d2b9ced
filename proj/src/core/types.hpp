// Copyright 2026 The mcpref Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mcpref {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Objects are indexed 0..d-1 and criteria 0..k-1 throughout.

enum class ErrorCode {
  kInvalidArgument,
  kDimension,
  kValidation,
  kIo,
  kUnsupported,
  kSolver,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline constexpr double kSimplexTol = 1e-12;

/// A point on the probability simplex over d objects.
class Distribution {
 public:
  explicit Distribution(Vec weights) : weights_(std::move(weights)) {
    if (weights_.size() == 0)
      throw Error(ErrorCode::kInvalidArgument, "empty distribution");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < weights_.size(); ++i) {
      double w = weights_[i];
      if (!std::isfinite(w) || w < -kSimplexTol)
        throw Error(ErrorCode::kValidation,
                    "distribution weight negative at index " +
                        std::to_string(i));
      if (w < 0.0) weights_[i] = 0.0;  // clamp -1e-12..0 dust
      sum += weights_[i];
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw Error(ErrorCode::kValidation,
                  "distribution weights sum to " + std::to_string(sum));
  }

  static Distribution uniform(int d) {
    return Distribution(Vec::Constant(d, 1.0 / d));
  }
  static Distribution point_mass(int d, int i) {
    if (i < 0 || i >= d)
      throw Error(ErrorCode::kInvalidArgument, "point mass index out of range");
    Vec w = Vec::Zero(d);
    w[i] = 1.0;
    return Distribution(std::move(w));
  }

  int size() const { return static_cast<int>(weights_.size()); }
  const Vec& weights() const { return weights_; }
  double operator[](int i) const { return weights_[i]; }

 private:
  Vec weights_;
};

/// Selects the l_q norm, 1 <= q <= infinity.
struct NormSpec {
  double q = std::numeric_limits<double>::infinity();

  NormSpec() = default;
  explicit NormSpec(double q_in) : q(q_in) {
    if (!(q >= 1.0))  // also rejects NaN
      throw Error(ErrorCode::kInvalidArgument, "norm exponent must be >= 1");
  }

  static NormSpec linf() { return NormSpec(); }
  static NormSpec l1() { return NormSpec(1.0); }
  static NormSpec l2() { return NormSpec(2.0); }

  bool is_inf() const { return std::isinf(q); }
  bool is_smooth() const { return q > 1.0 && !is_inf(); }

  /// k^{1/q}; equals 1 for the sup norm.
  double dim_factor(int k) const {
    return is_inf() ? 1.0 : std::pow(static_cast<double>(k), 1.0 / q);
  }

  double norm(const Vec& v) const {
    if (is_inf()) return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
    if (q == 1.0) return v.cwiseAbs().sum();
    if (q == 2.0) return v.norm();
    double s = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      s += std::pow(std::abs(v[i]), q);
    return std::pow(s, 1.0 / q);
  }
};

}  // namespace mcpref
