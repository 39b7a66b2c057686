#include "tkr/trees.hpp"

#include <bit>

#include "tkr/errors.hpp"
#include "tkr/snf.hpp"

namespace tkr {

bool is_apc(const CellComplex& k) {
  for (int d = 0; d < k.dim(); ++d)
    if (homology(k, d, true).betti != 0) return false;
  return true;
}

int cst_required_size(const CellComplex& k, int j) {
  if (j < 0 || j > k.dim()) fail("OutOfRange", "tree level outside 0..dim");
  if (j == 0) return 1;
  CellComplex skel = skeleton(k, j);
  int top = homology(skel, j, true).betti;
  int below = homology(skel, j - 1, true).betti;
  return static_cast<int>(k.f(j)) - top + below;
}

CstVerdict cst_verdict(const SpanningSubcomplex& s) {
  CstVerdict v;
  if (s.j == 0) {
    int n = s.count();
    v.top_acyclic = n <= 1;
    v.codim_connected = n >= 1;
    v.count_matches = n == 1;
  } else {
    HomologySummary top = homology(s, s.j, true);
    v.top_acyclic = top.betti == 0 && top.torsion_factors.empty();
    v.codim_connected = homology(s, s.j - 1, true).betti == 0;
    v.count_matches = s.count() == cst_required_size(*s.parent, s.j);
  }
  v.is_cst = v.top_acyclic && v.codim_connected && v.count_matches;
  return v;
}

namespace {

// A size-filtered rank test equivalent to the three spanning-tree conditions:
// the required size equals the dimension of the reduced cycle space one level
// down, so a subset of that size with independent boundary columns hits all
// three conditions at once (any two of them force the third).
bool is_cst_fast(const CellComplex& k, int j, std::uint64_t mask,
                 int required) {
  if (std::popcount(mask) != required) return false;
  if (j == 0) return true;
  return rank_of(k.boundary(j).select_columns_mask(mask)) == required;
}

}  // namespace

std::vector<SpanningSubcomplex> enumerate_csts(const CellComplex& k, int j,
                                               const EnumOptions& opts) {
  if (j < 0 || j > k.dim()) fail("OutOfRange", "tree level outside 0..dim");
  check_enumeration_size(k.f(j), opts);
  const int required = cst_required_size(k, j);
  using Masks = std::vector<std::uint64_t>;
  Masks masks = fold_subsets<Masks>(
      k.f(j), opts, Masks{},
      [&](std::uint64_t mask, Masks& acc) {
        if (is_cst_fast(k, j, mask, required)) acc.push_back(mask);
      },
      [](Masks& a, const Masks& b) { a.insert(a.end(), b.begin(), b.end()); });
  std::vector<SpanningSubcomplex> out;
  out.reserve(masks.size());
  for (std::uint64_t mask : masks) out.push_back(SpanningSubcomplex{&k, j, mask});
  return out;
}

Int tau(const CellComplex& k, int j, const EnumOptions& opts) {
  if (j < 0 || j > k.dim()) fail("OutOfRange", "tree level outside 0..dim");
  check_enumeration_size(k.f(j), opts);
  const int required = cst_required_size(k, j);
  return fold_subsets<Int>(
      k.f(j), opts, Int(0),
      [&](std::uint64_t mask, Int& acc) {
        if (is_cst_fast(k, j, mask, required)) ++acc;
      },
      [](Int& a, const Int& b) { a += b; });
}

Int weighted_tau(const CellComplex& k, int j, const EnumOptions& opts) {
  if (j < 0 || j > k.dim()) fail("OutOfRange", "tree level outside 0..dim");
  check_enumeration_size(k.f(j), opts);
  const int required = cst_required_size(k, j);
  return fold_subsets<Int>(
      k.f(j), opts, Int(0),
      [&](std::uint64_t mask, Int& acc) {
        if (!is_cst_fast(k, j, mask, required)) return;
        acc += j == 0 ? Int(1)
                      : torsion_weight(SpanningSubcomplex{&k, j, mask});
      },
      [](Int& a, const Int& b) { a += b; });
}

MatrixTreeResult matrix_tree_weighted(const CellComplex& k, int j,
                                      const SpanningSubcomplex& gamma) {
  if (j < 1 || j > k.dim()) fail("OutOfRange", "tree level outside 1..dim");
  if (!is_apc(k))
    fail("NotApc", "the determinant tree count needs a complex that is acyclic in positive codimension");
  if (gamma.parent != &k || gamma.j != j - 1)
    fail("NotACst", "gamma must be a level-" + std::to_string(j - 1) + " subcomplex of the same complex");
  if (!cst_verdict(gamma).is_cst)
    fail("NotACst", "gamma is not a level-" + std::to_string(j - 1) + " spanning tree");

  const IntMat& d = k.boundary(j);
  IntMat laplacian = d * d.transpose();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k.f(j - 1); ++i)
    if (!gamma.contains_cell(static_cast<int>(i))) keep.push_back(i);
  Int det = determinant(laplacian.select_rows(keep).select_columns(keep));

  Int t_complex = 1, t_gamma = 1;
  if (j >= 2) {
    t_complex = homology(k, j - 2, true).torsion_order;
    t_gamma = homology(gamma, j - 2, true).torsion_order;
  }
  MatrixTreeResult res;
  res.raw_determinant = det;
  res.gamma_mask = gamma.mask;
  Int numerator = det * t_complex * t_complex;
  Int denominator = t_gamma * t_gamma;
  if (numerator % denominator != 0)
    fail("NonExactDivision", "torsion correction does not divide the Laplacian determinant");
  res.value = numerator / denominator;
  return res;
}

}  // namespace tkr
