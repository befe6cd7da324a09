// Copyright 2026 The bdmlab Authors
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

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace bdmlab {

// Dense row-major matrix. Used for distance tables and canonical-form input.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix square(int n, T fill = T{}) { return Matrix(n, n, fill); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const T& operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  std::span<T> row(int i) {
    return {data_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  std::span<const T> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }

  std::span<const T> data() const { return data_; }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  // Rows `row_ids`, columns `col_ids`, in the given order.
  Matrix submatrix(std::span<const int> row_ids,
                   std::span<const int> col_ids) const {
    Matrix out(static_cast<int>(row_ids.size()),
               static_cast<int>(col_ids.size()));
    for (std::size_t i = 0; i < row_ids.size(); ++i)
      for (std::size_t j = 0; j < col_ids.size(); ++j)
        out(static_cast<int>(i), static_cast<int>(j)) =
            (*this)(row_ids[i], col_ids[j]);
    return out;
  }

  Matrix principal(std::span<const int> ids) const {
    return submatrix(ids, ids);
  }

  // Simultaneous row/column permutation: out(p[i], p[j]) = in(i, j).
  Matrix permuted(std::span<const int> p) const {
    assert(rows_ == cols_ && static_cast<int>(p.size()) == rows_);
    Matrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(p[i], p[j]) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

}  // namespace bdmlab
