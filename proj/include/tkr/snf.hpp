#pragma once

#include <vector>

#include "tkr/matrix.hpp"

namespace tkr {

// Diagonal data of the Smith normal form: rank many positive invariant
// factors d_1 | d_2 | ... | d_rank (ones included).
struct SmithForm {
  int rank = 0;
  std::vector<Int> invariant_factors;
};

SmithForm smith_normal_form(IntMat m);

// Exact rank over the rationals (fraction-free Bareiss elimination).
int rank_of(IntMat m);

// Exact determinant of a square matrix; the 0 x 0 determinant is 1.
Int determinant(IntMat m);

}  // namespace tkr
