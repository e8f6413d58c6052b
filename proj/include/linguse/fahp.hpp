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
#pragma once

#include <map>
#include <string>
#include <vector>

namespace linguse {

/// Triangular fuzzy number (l, m, u), l <= m <= u.
struct TriangularFuzzyNumber {
  double l = 1.0;
  double m = 1.0;
  double u = 1.0;

  /// Fuzzy reciprocal (1/u, 1/m, 1/l).
  TriangularFuzzyNumber reciprocal() const;
  friend bool operator==(const TriangularFuzzyNumber&, const TriangularFuzzyNumber&) = default;
};

/// Checks ordering and, for judgment values, strict positivity.
void validate_judgment(const TriangularFuzzyNumber& value);

/// Linguistic importance label -> TFN.
class JudgmentScale {
 public:
  JudgmentScale() = default;
  explicit JudgmentScale(std::map<std::string, TriangularFuzzyNumber> entries);

  /// Just (1,1,1), Equally (1,1,3), Weak (1,3,5), Moderately (1,3,5),
  /// Strongly (3,5,7), Very strongly (5,7,9), Absolute (7,9,9).
  static const JudgmentScale& standard();

  const TriangularFuzzyNumber& at(const std::string& label) const;
  bool contains(const std::string& label) const { return entries_.count(label) != 0; }
  /// Copy with `overrides` replacing or extending entries.
  JudgmentScale merged(const std::map<std::string, TriangularFuzzyNumber>& overrides) const;
  const std::map<std::string, TriangularFuzzyNumber>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, TriangularFuzzyNumber> entries_;
};

/// Upper-triangle judgment: criterion `row` compared with criterion `col`.
struct PairJudgment {
  int row;
  int col;
  std::string label;
};

/// m x m reciprocal matrix of TFN judgments with (1,1,1) diagonal.
class PairwiseMatrix {
 public:
  /// Identity judgments of size m.
  explicit PairwiseMatrix(int size);

  int size() const noexcept { return size_; }
  const TriangularFuzzyNumber& at(int row, int col) const { return cells_[index(row, col)]; }
  /// Sets (row, col) and its reciprocal mirror.
  void set(int row, int col, const TriangularFuzzyNumber& value);

 private:
  std::size_t index(int row, int col) const;
  int size_;
  std::vector<TriangularFuzzyNumber> cells_;
};

/// Builds the matrix from every upper-triangle judgment. A judgment stated
/// with row > col is applied as the reciprocal of its mirror.
PairwiseMatrix build_pairwise_matrix(int size, const std::vector<PairJudgment>& judgments,
                                     const JudgmentScale& scale = JudgmentScale::standard());

/// Row sums, the inverted grand total and their product per criterion.
struct SyntheticExtents {
  std::vector<TriangularFuzzyNumber> row_sums;
  TriangularFuzzyNumber inverse_total;
  std::vector<TriangularFuzzyNumber> extents;
};

SyntheticExtents fuzzy_synthetic_extents(const PairwiseMatrix& matrix);

/// V(a >= b).
double possibility_degree(const TriangularFuzzyNumber& a, const TriangularFuzzyNumber& b);

struct CriteriaWeights {
  std::vector<double> raw;         // min_j' V(s_j >= s_j')
  std::vector<double> normalized;  // sums to 1
  double consistency_index = 0.0;
  bool consistent = true;
};

inline constexpr double kConsistencyThreshold = 0.10;

/// Fuzzy extent analysis weights plus consistency verdict. Throws
/// ConsistencyError when every raw weight is zero.
CriteriaWeights derive_weights(const PairwiseMatrix& matrix);

/// (lambda - m) / (m - 1) on the crisp midpoint matrix, with lambda estimated
/// as the column sums weighted by the extent-analysis weights. Matrices with
/// m <= 2 are consistent by definition (0).
double consistency_index(const PairwiseMatrix& matrix);

/// Same index for precomputed normalized weights.
double consistency_index(const PairwiseMatrix& matrix, const std::vector<double>& normalized_weights);

}  // namespace linguse
