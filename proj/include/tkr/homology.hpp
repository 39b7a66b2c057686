#pragma once

#include <vector>

#include "tkr/cell_complex.hpp"
#include "tkr/snf.hpp"

namespace tkr {

struct HomologySummary {
  int degree = 0;
  bool reduced = false;
  int betti = 0;
  std::vector<Int> torsion_factors;  // invariant factors exceeding 1
  Int torsion_order = 1;             // their product
};

// Integral (co)cellular homology in one degree. Reduced homology augments
// degree 0 by the all-ones map; degrees above 0 are unaffected by the flag.
HomologySummary homology(const CellComplex& k, int degree, bool reduced = false);
HomologySummary homology(const SpanningSubcomplex& s, int degree, bool reduced = false);

std::vector<HomologySummary> all_homology(const CellComplex& k, bool reduced = false);

int betti_number(const CellComplex& k, int degree, bool reduced = false);
int betti_number(const SpanningSubcomplex& s, int degree, bool reduced = false);

// Squared order of the torsion subgroup of H_{j-1}(S), the weight each
// spanning subcomplex contributes to torsion-weighted counts.
Int torsion_weight(const SpanningSubcomplex& s);

}  // namespace tkr
