#pragma once

#include <cstdint>
#include <vector>

#include "tkr/cell_complex.hpp"
#include "tkr/enumeration.hpp"
#include "tkr/homology.hpp"

namespace tkr {

struct CstVerdict {
  bool top_acyclic = false;     // H_j of the subcomplex vanishes
  bool codim_connected = false; // reduced H_{j-1} has rank zero
  bool count_matches = false;   // |S| equals the forced cell count
  bool is_cst = false;
};

// Acyclic in positive codimension: all reduced Betti numbers below the top
// dimension vanish.
bool is_apc(const CellComplex& k);

// The cell count every level-j spanning tree must have, read off the
// j-skeleton's reduced Betti numbers.
int cst_required_size(const CellComplex& k, int j);

CstVerdict cst_verdict(const SpanningSubcomplex& s);

std::vector<SpanningSubcomplex> enumerate_csts(const CellComplex& k, int j,
                                               const EnumOptions& opts = {});

// Number of level-j cellular spanning trees.
Int tau(const CellComplex& k, int j, const EnumOptions& opts = {});

// Same count with each tree weighted by its squared codimension-one torsion.
Int weighted_tau(const CellComplex& k, int j, const EnumOptions& opts = {});

struct MatrixTreeResult {
  Int value;            // torsion-corrected weighted tree count
  Int raw_determinant;  // det of the reduced combinatorial Laplacian
  std::uint64_t gamma_mask = 0;
};

// Weighted tree count through the reduced-Laplacian determinant, relative to
// a chosen level-(j-1) spanning tree gamma.
MatrixTreeResult matrix_tree_weighted(const CellComplex& k, int j,
                                      const SpanningSubcomplex& gamma);

}  // namespace tkr
