#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tkr/cell_complex.hpp"
#include "tkr/enumeration.hpp"
#include "tkr/poly.hpp"

namespace tkr {

// A complex on the k-sphere paired with its dual cell structure: the
// correspondence sends each j-cell to a (k-j)-cell of the dual.
struct DualPair {
  CellComplex k;
  CellComplex k_star;
  std::vector<std::vector<int>> fwd;  // fwd[j][i] = dual cell index
};

const std::vector<std::string>& builtin_pair_names();
bool is_builtin_pair_name(const std::string& name);
DualPair builtin_pair(const std::string& name);

// File form:
//   dual <complex-ref> <complex-ref>
//   <cell-id> ~ <dual-cell-id>
// Complex refs resolve builtin-first, then as paths relative to the file.
DualPair load_pair_file(const std::string& path);

// Bijection shape plus sphere homology of both sides.
ValidationResult validate_pair(const DualPair& p);

// Complement-dual of a level-j subset: the duals of the j-cells left out.
SpanningSubcomplex dual_subcomplex(const DualPair& p, const SpanningSubcomplex& s);

struct DualityReport {
  BiPoly lhs;          // level-j polynomial of K
  BiPoly rhs;          // level-(k-j) polynomial of the dual
  bool equal = false;  // lhs == rhs with variables exchanged
};

// Level-j vs level-(k-j) polynomial comparison; `modified` weights by
// torsion and is restricted to 1 <= j <= k-1.
DualityReport check_duality(const DualPair& p, int j, bool modified,
                            const EnumOptions& opts = {});

struct AlexanderReport {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  bool ok = false;
  std::string first_failure;
};

// Subset-by-subset Betti and torsion identities between each level-j subset
// and its complement-dual; `strict` compares torsion invariant factors
// instead of orders.
AlexanderReport check_alexander_identities(const DualPair& p, int j, bool strict,
                                           const EnumOptions& opts = {});

}  // namespace tkr
