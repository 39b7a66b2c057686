#include "tkr/snf.hpp"

#include <cassert>
#include <cstddef>
#include <utility>

namespace tkr {

namespace {

void swap_rows(IntMat& a, std::size_t r, std::size_t s) {
  if (r == s) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(s, j));
}

void swap_cols(IntMat& a, std::size_t c, std::size_t d) {
  if (c == d) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, c), a.at(i, d));
}

// row_r -= q * row_t, columns t..end
void row_axpy(IntMat& a, std::size_t r, std::size_t t, const Int& q, std::size_t from) {
  if (q == 0) return;
  for (std::size_t j = from; j < a.cols(); ++j) a.at(r, j) -= q * a.at(t, j);
}

void col_axpy(IntMat& a, std::size_t c, std::size_t t, const Int& q, std::size_t from) {
  if (q == 0) return;
  for (std::size_t i = from; i < a.rows(); ++i) a.at(i, c) -= q * a.at(i, t);
}

// Smallest-magnitude nonzero entry of the trailing submatrix, or false.
bool find_pivot(const IntMat& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Int& v = a.at(i, j);
      if (v == 0) continue;
      Int m = abs_int(v);
      if (!found || m < best) {
        found = true;
        best = m;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(IntMat a) {
  SmithForm out;
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t t = 0;
  while (t < m && t < n) {
    std::size_t pi, pj;
    if (!find_pivot(a, t, pi, pj)) break;
    swap_rows(a, t, pi);
    swap_cols(a, t, pj);

    bool dirty = false;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (a.at(i, t) == 0) continue;
      Int q = a.at(i, t) / a.at(t, t);
      row_axpy(a, i, t, q, t);
      if (a.at(i, t) != 0) dirty = true;  // remainder is a smaller pivot candidate
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (a.at(t, j) == 0) continue;
      Int q = a.at(t, j) / a.at(t, t);
      col_axpy(a, j, t, q, t);
      if (a.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;

    // Pivot must divide the whole trailing block for the divisibility chain;
    // folding an offending row into row t exposes the obstruction to the
    // pivot search on the next pass.
    bool fixed_up = false;
    for (std::size_t i = t + 1; i < m && !fixed_up; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          for (std::size_t c = t; c < n; ++c) a.at(t, c) += a.at(i, c);
          fixed_up = true;
          break;
        }
    if (fixed_up) continue;

    out.invariant_factors.push_back(abs_int(a.at(t, t)));
    ++t;
  }
  out.rank = static_cast<int>(out.invariant_factors.size());
  for (std::size_t i = 0; i + 1 < out.invariant_factors.size(); ++i)
    assert(out.invariant_factors[i + 1] % out.invariant_factors[i] == 0);
  return out;
}

int rank_of(IntMat a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && a.at(piv, c) == 0) ++piv;
    if (piv == m) continue;
    swap_rows(a, r, piv);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        a.at(i, j) = (a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j)) / prev;
      a.at(i, c) = 0;
    }
    prev = a.at(r, c);
    ++r;
  }
  return static_cast<int>(r);
}

Int determinant(IntMat a) {
  if (a.rows() != a.cols()) fail("DimensionMismatch", "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      swap_rows(a, c, piv);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        a.at(i, j) = (a.at(c, c) * a.at(i, j) - a.at(i, c) * a.at(c, j)) / prev;
      a.at(i, c) = 0;
    }
    prev = a.at(c, c);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

}  // namespace tkr
