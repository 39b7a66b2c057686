#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tkr/matrix.hpp"

namespace tkr {

struct CellRef {
  int dim = 0;
  int index = 0;
  bool operator==(const CellRef&) const = default;
  bool operator<(const CellRef& o) const {
    return dim != o.dim ? dim < o.dim : index < o.index;
  }
};

struct ValidationResult {
  bool ok = true;
  std::string code;
  std::string message;
};

// (row, col) pairs marking cells that are incident through an attaching map
// whose algebraic degree cancels to zero, e.g. a 2-cell glued onto a loop by
// a degree-zero map. The boundary matrix alone cannot see such incidences,
// but closures, free-face tests, and deletions must.
using IncidenceHints = std::set<std::pair<int, int>>;

// A finite CW-style complex presented by its integer boundary matrices.
// Immutable after construction; every operation returns a new complex.
class CellComplex {
public:
  CellComplex() = default;

  // ids[j] names the j-cells; boundaries[j-1] is the matrix of the boundary
  // map from j-cells to (j-1)-cells (f_{j-1} rows, f_j columns); hints[j-1]
  // holds explicit zero-coefficient incidences of that map.
  CellComplex(std::string name, std::vector<std::vector<std::string>> ids,
              std::vector<IntMat> boundaries,
              std::vector<IncidenceHints> hints = {});

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(ids_.size()) - 1; }
  std::size_t f(int j) const {
    return j >= 0 && j <= dim() ? ids_[j].size() : 0;
  }
  std::size_t total_cells() const;

  const std::vector<std::string>& cells(int j) const { return ids_[j]; }

  // Boundary map leaving dimension j, valid for 0 <= j <= dim(); the map at
  // j = 0 is the empty 0 x f_0 matrix.
  const IntMat& boundary(int j) const { return d_[j]; }
  const IncidenceHints& hints(int j) const { return hints_[j]; }

  // True when the boundary coefficient is nonzero or the pair is hinted.
  bool incident(int j, int row, int col) const;

  // Row indices supporting column `col` of boundary(j), hints included.
  std::vector<int> faces_of(int j, int col) const;

  int index_of(int j, const std::string& id) const;  // -1 when absent
  const std::string& id_of(CellRef c) const { return ids_[c.dim][c.index]; }
  bool contains(CellRef c) const {
    return c.dim >= 0 && c.dim <= dim() && c.index >= 0 &&
           c.index < static_cast<int>(f(c.dim));
  }

  CellComplex with_name(std::string new_name) const;

private:
  std::string name_;
  std::vector<std::vector<std::string>> ids_;  // size dim()+1
  std::vector<IntMat> d_;                      // size dim()+1, d_[0] is 0 x f_0
  std::vector<IncidenceHints> hints_;          // size dim()+1, hints_[0] empty
};

// Checks shapes, unique ids per dimension, and boundary-of-boundary == 0.
ValidationResult validate(const CellComplex& k);

// Throwing variant used by operations that require a well-formed complex.
void require_valid_shapes(const CellComplex& k);

CellComplex skeleton(const CellComplex& k, int j);

// The cell together with the iterated support of its boundary columns
// (explicit zero-coefficient incidences included), sorted by (dim, index).
std::vector<CellRef> closure(const CellComplex& k, CellRef c);

// Removes one cell that no higher cell is incident to.
CellComplex delete_cell(const CellComplex& k, CellRef c);

// Quotient collapsing the closure of `c` to a new basepoint 0-cell.
CellComplex contract_closure(const CellComplex& k, CellRef c);

// Elementary collapse of the free pair (tau, sigma).
CellComplex collapse(const CellComplex& k, CellRef sigma, CellRef tau);

// Subcomplex spanned by a downward-closed cell set, with an explicit ambient
// dimension (top dimensions may be empty).
CellComplex subcomplex_from_cells(const CellComplex& k,
                                  const std::vector<CellRef>& cells,
                                  int forced_dim, std::string name);

long long euler_characteristic(const CellComplex& k);

// Structure-only serialization (ids and name excluded): equal keys imply
// equal chain complexes with equal hints.
std::string structural_key(const CellComplex& k);

// Like structural_key after reordering cells within each dimension by a
// content-derived sort, so that branch-order relabelings of isomorphic
// complexes tend to agree. Equal keys still imply isomorphic complexes.
std::string canonical_key(const CellComplex& k);

// A subset of j-cells together with the full (j-1)-skeleton of its parent.
struct SpanningSubcomplex {
  const CellComplex* parent = nullptr;
  int j = 0;
  std::uint64_t mask = 0;

  int count() const;
  bool contains_cell(int idx) const { return mask >> idx & 1; }
  IntMat restricted_boundary() const;  // columns of parent->boundary(j) in mask
  std::vector<std::string> cell_ids() const;
};

// Materializes the subcomplex as a standalone complex of dimension j.
CellComplex realize(const SpanningSubcomplex& s, std::string name);

}  // namespace tkr
