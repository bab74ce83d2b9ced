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

#include "core/tensor.hpp"

namespace mcpref {

PreferenceTensor::PreferenceTensor(std::vector<Mat> slices,
                                   std::vector<std::string> criteria_names)
    : slices_(std::move(slices)), names_(std::move(criteria_names)) {
  if (slices_.empty())
    throw Error(ErrorCode::kInvalidArgument, "tensor needs at least 1 slice");
  k_ = static_cast<int>(slices_.size());
  d_ = static_cast<int>(slices_[0].rows());
  if (d_ < 1) throw Error(ErrorCode::kInvalidArgument, "tensor needs d >= 1");
  for (const Mat& m : slices_)
    if (m.rows() != d_ || m.cols() != d_)
      throw Error(ErrorCode::kDimension, "tensor slices must all be d x d");
  if (!names_.empty() && static_cast<int>(names_.size()) != k_)
    throw Error(ErrorCode::kDimension, "criteria_names length != k");
}

void PreferenceTensor::check_object(int i) const {
  if (i < 0 || i >= d_)
    throw Error(ErrorCode::kInvalidArgument,
                "object index " + std::to_string(i) + " out of range");
}

Vec PreferenceTensor::score(const Distribution& pi1,
                            const Distribution& pi2) const {
  if (pi1.size() != d_ || pi2.size() != d_)
    throw Error(ErrorCode::kDimension, "distribution size != tensor d");
  Vec out(k_);
  for (int j = 0; j < k_; ++j)
    out[j] = pi1.weights().dot(slices_[j] * pi2.weights());
  return out;
}

Vec PreferenceTensor::score_vs_pure(const Distribution& pi1, int i2) const {
  if (pi1.size() != d_)
    throw Error(ErrorCode::kDimension, "distribution size != tensor d");
  check_object(i2);
  return score_linear(pi1.weights(), i2);
}

Vec PreferenceTensor::score_linear(const Vec& x, int i2) const {
  if (x.size() != d_)
    throw Error(ErrorCode::kDimension, "vector size != tensor d");
  check_object(i2);
  Vec out(k_);
  for (int j = 0; j < k_; ++j) out[j] = x.dot(slices_[j].col(i2));
  return out;
}

Mat PreferenceTensor::column_slice(int i2) const {
  check_object(i2);
  Mat out(d_, k_);
  for (int j = 0; j < k_; ++j) out.col(j) = slices_[j].col(i2);
  return out;
}

Mat PreferenceTensor::weighted_matrix(const Vec& w) const {
  if (w.size() != k_)
    throw Error(ErrorCode::kDimension, "weight length != tensor k");
  Distribution check(w);  // rejects off-simplex weights
  Mat out = Mat::Zero(d_, d_);
  for (int j = 0; j < k_; ++j) out += w[j] * slices_[j];
  return out;
}

ValidationResult validate_tensor(const PreferenceTensor& t) {
  ValidationResult res;
  const int d = t.objects(), k = t.criteria();
  for (int j = 0; j < k; ++j) {
    for (int i1 = 0; i1 < d; ++i1) {
      for (int i2 = 0; i2 < d; ++i2) {
        double v = t.p(j, i1, i2);
        if (!std::isfinite(v) || v < -kValidationTol ||
            v > 1.0 + kValidationTol)
          res.violations.push_back({Violation::Kind::kRange, j, i1, i2,
                                    std::isfinite(v) ? std::max(-v, v - 1.0)
                                                     : 1.0});
        if (i1 == i2 && std::abs(v - 0.5) > kValidationTol)
          res.violations.push_back(
              {Violation::Kind::kDiagonal, j, i1, i2, std::abs(v - 0.5)});
        if (i1 < i2) {
          double gap = std::abs(v + t.p(j, i2, i1) - 1.0);
          if (gap > kValidationTol)
            res.violations.push_back(
                {Violation::Kind::kSymmetry, j, i1, i2, gap});
        }
      }
    }
  }
  res.ok = res.violations.empty();
  return res;
}

PreferenceTensor complete_upper(const std::vector<Mat>& upper,
                                std::vector<std::string> criteria_names) {
  if (upper.empty())
    throw Error(ErrorCode::kInvalidArgument, "need at least 1 slice");
  const auto d = upper[0].rows();
  std::vector<Mat> full;
  full.reserve(upper.size());
  for (size_t j = 0; j < upper.size(); ++j) {
    const Mat& u = upper[j];
    if (u.rows() != d || u.cols() != d)
      throw Error(ErrorCode::kDimension, "upper slices must all be d x d");
    Mat m = Mat::Constant(d, d, 0.5);
    for (Eigen::Index i1 = 0; i1 < d; ++i1) {
      for (Eigen::Index i2 = i1 + 1; i2 < d; ++i2) {
        double v = u(i1, i2);
        if (std::isnan(v))
          throw Error(ErrorCode::kInvalidArgument,
                      "missing upper entry (" + std::to_string(j) + "," +
                          std::to_string(i1) + "," + std::to_string(i2) + ")");
        m(i1, i2) = v;
        m(i2, i1) = 1.0 - v;
      }
    }
    full.push_back(std::move(m));
  }
  return PreferenceTensor(std::move(full), std::move(criteria_names));
}

}  // namespace mcpref
