#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tkr/cell_complex.hpp"
#include "tkr/enumeration.hpp"
#include "tkr/poly.hpp"

namespace tkr {

// Matroid of the level-j boundary columns over Q, with the cell order as
// ground order and a cached exact rank oracle.
class ColumnMatroid {
public:
  ColumnMatroid(const CellComplex& k, int j);

  int size() const { return n_; }
  int full_rank() const { return full_rank_; }
  int rank(std::uint64_t mask) const;
  bool is_basis(std::uint64_t mask) const;
  std::uint64_t full_mask() const { return n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1; }

private:
  IntMat columns_;
  int n_ = 0;
  int full_rank_ = 0;
  mutable std::map<std::uint64_t, int> rank_cache_;
};

// Tutte polynomial by deletion-contraction with loop/coloop handling,
// memoized on minors.
BiPoly tutte_deletion_contraction(const ColumnMatroid& m);

// Same polynomial as the corank-nullity subset sum.
BiPoly tutte_corank_nullity(const ColumnMatroid& m, const EnumOptions& opts = {});

std::vector<std::uint64_t> matroid_bases(const ColumnMatroid& m, const EnumOptions& opts = {});

struct Activities {
  int internal_count = 0;
  int external_count = 0;
};

// Internal/external activity of a basis under the ground order.
Activities activities(const ColumnMatroid& m, std::uint64_t basis);

// Squared codimension-one torsion of the spanning subcomplex a basis spans.
Int basis_multiplicity(const CellComplex& k, int j, std::uint64_t basis);

struct MatroidCheckReport {
  bool shift_identity = false;        // subset polynomial == Tutte at shifted arguments
  bool bases_checked = false;         // tree comparison ran (complex is APC)
  bool bases_match_trees = false;     // matroid bases == level-j spanning trees
  bool activities_expansion = false;  // basis activity sum == shifted subset polynomial
};

MatroidCheckReport check_matroid_correspondence(const CellComplex& k, int j,
                                                const EnumOptions& opts = {});

}  // namespace tkr
