#pragma once

#include <string>
#include <vector>

#include "tkr/cell_complex.hpp"
#include "tkr/enumeration.hpp"
#include "tkr/poly.hpp"

namespace tkr {

struct CellClass {
  bool is_loop = false;          // boundary column is zero
  bool is_bridge = false;        // removing the column drops the rank
  bool boundary_regular = false; // attaching boundary is a homology sphere in codim 1
  std::vector<CellRef> free_faces;
};

// Classifies a top-dimensional cell; NotTopCell otherwise.
CellClass classify_cell(const CellComplex& k, CellRef sigma);

enum class SkeinCase { loop, bridge, del_contract, not_applicable };

struct SkeinReport {
  SkeinCase kind = SkeinCase::not_applicable;
  CellClass cls;
  bool applicable = false;
  bool equal = false;
  BiPoly lhs;               // top polynomial of the complex itself
  BiPoly rhs;               // value the selected relation predicts
  BiPoly deletion_part;     // filled for del_contract and not_applicable
  BiPoly contraction_part;
};

// Checks the rewrite relation selected by the cell's classification against
// direct enumeration on both sides.
SkeinReport verify_skein(const CellComplex& k, CellRef sigma, const EnumOptions& opts = {});

struct SkeinTrace {
  std::vector<std::string> lines;
};

// Computes the top polynomial by rewriting: loops are deleted with a (Y+1)
// factor, suitable bridges contracted or collapsed with an (X+1) factor,
// boundary-regular cells split into contraction plus deletion, and complexes
// with no applicable cell fall back to direct enumeration. Intermediate
// results are cached by a relabeling-insensitive key.
BiPoly skein_evaluate(const CellComplex& k, const EnumOptions& opts = {},
                      SkeinTrace* trace = nullptr);

}  // namespace tkr
