// Copyright 2026 The linguse Authors
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
#include "linguse/fahp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "linguse/errors.hpp"

namespace linguse {

TriangularFuzzyNumber TriangularFuzzyNumber::reciprocal() const { return {1.0 / u, 1.0 / m, 1.0 / l}; }

void validate_judgment(const TriangularFuzzyNumber& v) {
  if (!std::isfinite(v.l) || !std::isfinite(v.m) || !std::isfinite(v.u) || !(v.l <= v.m && v.m <= v.u)) {
    std::ostringstream os;
    os << "fuzzy judgment (" << v.l << ", " << v.m << ", " << v.u << ") is not ordered l <= m <= u";
    throw DomainError(os.str());
  }
  if (v.l <= 0.0) {
    std::ostringstream os;
    os << "fuzzy judgment (" << v.l << ", " << v.m << ", " << v.u << ") has a non-positive component";
    throw DomainError(os.str());
  }
}

JudgmentScale::JudgmentScale(std::map<std::string, TriangularFuzzyNumber> entries) : entries_(std::move(entries)) {
  for (const auto& [label, value] : entries_) {
    try {
      validate_judgment(value);
    } catch (const DomainError& e) {
      throw DomainError("judgment scale entry '" + label + "': " + e.what());
    }
  }
}

const JudgmentScale& JudgmentScale::standard() {
  static const JudgmentScale scale({
      {"Just important", {1, 1, 1}},
      {"Equally important", {1, 1, 3}},
      {"Weak importance", {1, 3, 5}},
      {"Moderately important", {1, 3, 5}},
      {"Strongly important", {3, 5, 7}},
      {"Very strongly important", {5, 7, 9}},
      {"Absolute", {7, 9, 9}},
  });
  return scale;
}

const TriangularFuzzyNumber& JudgmentScale::at(const std::string& label) const {
  auto it = entries_.find(label);
  if (it == entries_.end()) throw ConfigurationError("unknown judgment label '" + label + "'");
  return it->second;
}

JudgmentScale JudgmentScale::merged(const std::map<std::string, TriangularFuzzyNumber>& overrides) const {
  auto entries = entries_;
  for (const auto& [label, value] : overrides) entries[label] = value;
  return JudgmentScale(std::move(entries));
}

PairwiseMatrix::PairwiseMatrix(int size) : size_(size) {
  if (size < 1) throw DomainError("pairwise matrix needs at least one criterion");
  cells_.assign(static_cast<std::size_t>(size) * size, TriangularFuzzyNumber{});
}

std::size_t PairwiseMatrix::index(int row, int col) const {
  if (row < 0 || col < 0 || row >= size_ || col >= size_) {
    throw DomainError("pairwise cell (" + std::to_string(row) + ", " + std::to_string(col) + ") outside " +
                      std::to_string(size_) + "x" + std::to_string(size_));
  }
  return static_cast<std::size_t>(row) * size_ + col;
}

void PairwiseMatrix::set(int row, int col, const TriangularFuzzyNumber& value) {
  validate_judgment(value);
  if (row == col) {
    if (!(value == TriangularFuzzyNumber{})) throw DomainError("diagonal judgments must be (1, 1, 1)");
    return;
  }
  cells_[index(row, col)] = value;
  cells_[index(col, row)] = value.reciprocal();
}

PairwiseMatrix build_pairwise_matrix(int size, const std::vector<PairJudgment>& judgments,
                                     const JudgmentScale& scale) {
  PairwiseMatrix matrix(size);
  std::vector<bool> seen(static_cast<std::size_t>(size) * size, false);
  for (const auto& j : judgments) {
    if (j.row == j.col) throw ValidationError("criterion " + std::to_string(j.row) + " judged against itself");
    if (j.row < 0 || j.col < 0 || j.row >= size || j.col >= size) {
      throw ValidationError("judgment refers to criterion outside 0.." + std::to_string(size - 1));
    }
    const int lo = std::min(j.row, j.col);
    const int hi = std::max(j.row, j.col);
    auto slot = static_cast<std::size_t>(lo) * size + hi;
    if (seen[slot]) {
      throw ValidationError("pair (" + std::to_string(lo) + ", " + std::to_string(hi) + ") judged twice");
    }
    seen[slot] = true;
    const auto& value = scale.at(j.label);
    matrix.set(lo, hi, j.row < j.col ? value : value.reciprocal());
  }
  std::string missing;
  for (int r = 0; r < size; ++r) {
    for (int c = r + 1; c < size; ++c) {
      if (!seen[static_cast<std::size_t>(r) * size + c]) {
        missing += (missing.empty() ? "" : ", ") + std::string("(") + std::to_string(r) + ", " +
                   std::to_string(c) + ")";
      }
    }
  }
  if (!missing.empty()) throw ValidationError("missing pairwise judgments for " + missing);
  return matrix;
}

SyntheticExtents fuzzy_synthetic_extents(const PairwiseMatrix& matrix) {
  const int m = matrix.size();
  SyntheticExtents out;
  TriangularFuzzyNumber total{0, 0, 0};
  for (int r = 0; r < m; ++r) {
    TriangularFuzzyNumber sum{0, 0, 0};
    for (int c = 0; c < m; ++c) {
      const auto& v = matrix.at(r, c);
      sum.l += v.l;
      sum.m += v.m;
      sum.u += v.u;
    }
    total.l += sum.l;
    total.m += sum.m;
    total.u += sum.u;
    out.row_sums.push_back(sum);
  }
  out.inverse_total = total.reciprocal();
  for (const auto& s : out.row_sums) {
    out.extents.push_back({s.l * out.inverse_total.l, s.m * out.inverse_total.m, s.u * out.inverse_total.u});
  }
  return out;
}

double possibility_degree(const TriangularFuzzyNumber& a, const TriangularFuzzyNumber& b) {
  if (a.m >= b.m) return 1.0;
  if (b.l >= a.u) return 0.0;
  const double v = (b.l - a.u) / ((a.m - a.u) - (b.m - b.l));
  return std::clamp(v, 0.0, 1.0);
}

namespace {

std::vector<double> raw_weights(const std::vector<TriangularFuzzyNumber>& extents) {
  std::vector<double> raw(extents.size(), 1.0);
  for (std::size_t j = 0; j < extents.size(); ++j) {
    for (std::size_t k = 0; k < extents.size(); ++k) {
      if (j != k) raw[j] = std::min(raw[j], possibility_degree(extents[j], extents[k]));
    }
  }
  return raw;
}

}  // namespace

CriteriaWeights derive_weights(const PairwiseMatrix& matrix) {
  CriteriaWeights w;
  w.raw = raw_weights(fuzzy_synthetic_extents(matrix).extents);
  const double total = std::accumulate(w.raw.begin(), w.raw.end(), 0.0);
  if (total <= 0.0) {
    throw ConsistencyError("every criterion is fully dominated; revise the pairwise judgments", 0.0);
  }
  for (double r : w.raw) w.normalized.push_back(r / total);
  w.consistency_index = consistency_index(matrix, w.normalized);
  w.consistent = w.consistency_index <= kConsistencyThreshold;
  return w;
}

double consistency_index(const PairwiseMatrix& matrix, const std::vector<double>& normalized_weights) {
  const int m = matrix.size();
  if (static_cast<int>(normalized_weights.size()) != m) {
    throw DomainError("consistency_index: " + std::to_string(normalized_weights.size()) + " weights for " +
                      std::to_string(m) + " criteria");
  }
  if (m <= 2) return 0.0;
  double lambda = 0.0;
  for (int c = 0; c < m; ++c) {
    double col = 0.0;
    for (int r = 0; r < m; ++r) col += matrix.at(r, c).m;
    lambda += col * normalized_weights[c];
  }
  return (lambda - m) / (m - 1);
}

double consistency_index(const PairwiseMatrix& matrix) {
  if (matrix.size() <= 2) return 0.0;
  auto raw = raw_weights(fuzzy_synthetic_extents(matrix).extents);
  const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
  if (total <= 0.0) return 0.0;
  for (double& r : raw) r /= total;
  return consistency_index(matrix, raw);
}

}  // namespace linguse
