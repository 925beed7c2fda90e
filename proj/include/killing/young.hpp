// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "killing/group_algebra.hpp"
#include "killing/scalar.hpp"

namespace killing {

/// Partition of d drawn as left-justified rows of boxes.
class YoungFrame {
 public:
  YoungFrame() = default;
  /// Throws InvalidArgument unless rows are positive and weakly decreasing.
  explicit YoungFrame(std::vector<int> rows);
  /// Parses "(4,2,1)".
  static YoungFrame parse(std::string_view text);

  const std::vector<int>& rows() const { return rows_; }
  std::size_t size() const;
  std::size_t num_rows() const { return rows_.size(); }
  /// Length of column c (0-based).
  int column_length(int c) const;
  /// Hook length of box (r, c), both 0-based.
  int hook_length(int r, int c) const;
  std::string to_string() const;

  friend auto operator<=>(const YoungFrame&, const YoungFrame&) = default;
  friend bool operator==(const YoungFrame&, const YoungFrame&) = default;

 private:
  std::vector<int> rows_;
};

/// Young frame filled with the labels 1..d, each exactly once.
class YoungTableau {
 public:
  YoungTableau() = default;
  /// Throws InvalidArgument unless the row lengths form a frame and the
  /// labels are a permutation of 1..d.
  explicit YoungTableau(std::vector<std::vector<int>> rows);
  /// Parses "[[1,2],[3,4]]".
  static YoungTableau parse(std::string_view text);
  /// The tableau numbering boxes 1..d row by row.
  static YoungTableau row_reading(const YoungFrame& frame);

  const YoungFrame& frame() const { return frame_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<std::vector<int>> columns() const;
  std::size_t size() const { return frame_.size(); }
  std::string to_string() const;

 private:
  YoungFrame frame_;
  std::vector<std::vector<int>> rows_;
};

/// All partitions of d, in reverse lexicographic order: (d), (d-1,1), ...
std::vector<YoungFrame> partitions(int d);

/// Product of all hook lengths.
Scalar hook_product(const YoungFrame& frame);
/// Dimension of the S_d irrep: d! / hook_product.
Scalar sym_irrep_dim(const YoungFrame& frame);
/// Dimension of the GL(N) irrep: product of (column + N - row) over boxes,
/// with 1-based row and column, divided by hook_product.
Scalar gl_irrep_dim(const YoungFrame& frame, int n);

/// Product of the row symmetrisers times the product of the column
/// antisymmetrisers, unnormalized.
GroupAlgebraElement young_symmetriser(const YoungTableau& tab);
/// young_symmetriser divided by hook_product; idempotent.
GroupAlgebraElement young_projector(const YoungTableau& tab);

/// Decomposition of the induced product of two S-irreps, frame -> multiplicity,
/// by the box-adding Littlewood-Richardson procedure.
std::map<YoungFrame, int> lr_decompose(const YoungFrame& lambda1, const YoungFrame& lambda2);

}  // namespace killing
