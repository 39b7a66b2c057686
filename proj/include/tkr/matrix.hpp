#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tkr/bigint.hpp"
#include "tkr/errors.hpp"

namespace tkr {

// Dense integer matrix. Degenerate shapes (0 x n, n x 0) are valid and show up
// routinely as boundary maps of empty cell dimensions.
class IntMat {
public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMat from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    IntMat m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != m.cols_) fail("DimensionMismatch", "ragged matrix literal");
      std::size_t j = 0;
      for (long long v : row) m.at(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const Int& v : a_)
      if (v != 0) return false;
    return true;
  }

  bool column_is_zero(std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i)
      if (at(i, j) != 0) return false;
    return true;
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) return false;
    return true;
  }

  IntMat transpose() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMat operator*(const IntMat& o) const {
    if (cols_ != o.rows_) fail("DimensionMismatch", "matrix product shape mismatch");
    IntMat p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& v = at(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += v * o.at(k, j);
      }
    return p;
  }

  IntMat select_columns(const std::vector<std::size_t>& idx) const {
    IntMat m(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
    return m;
  }

  IntMat select_rows(const std::vector<std::size_t>& idx) const {
    IntMat m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
    return m;
  }

  // Keeps the columns whose bit is set in mask; column order is preserved.
  IntMat select_columns_mask(std::uint64_t mask) const {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < cols_; ++j)
      if (mask >> j & 1) idx.push_back(j);
    return select_columns(idx);
  }

  IntMat select_rows_mask(std::uint64_t mask) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < rows_; ++i)
      if (mask >> i & 1) idx.push_back(i);
    return select_rows(idx);
  }

  IntMat drop_column(std::size_t col) const {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < cols_; ++j)
      if (j != col) idx.push_back(j);
    return select_columns(idx);
  }

  IntMat drop_row(std::size_t row) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != row) idx.push_back(i);
    return select_rows(idx);
  }

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

}  // namespace tkr
