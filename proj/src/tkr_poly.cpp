#include "tkr/tkr_poly.hpp"

#include <bit>

#include "tkr/homology.hpp"
#include "tkr/snf.hpp"

namespace tkr {

namespace {

void require_level(const CellComplex& k, int j) {
  if (j < 1 || j > k.dim())
    fail("OutOfRange", "level " + std::to_string(j) + " outside 1.." + std::to_string(k.dim()));
}

}  // namespace

BiPoly tkr_polynomial(const CellComplex& k, int j, const EnumOptions& opts) {
  require_level(k, j);
  const IntMat& d = k.boundary(j);
  const int full_rank = rank_of(d);
  return fold_subsets<BiPoly>(
      k.f(j), opts, BiPoly(),
      [&](std::uint64_t mask, BiPoly& acc) {
        int r = rank_of(d.select_columns_mask(mask));
        acc.add_term(full_rank - r, std::popcount(mask) - r, 1);
      },
      [](BiPoly& acc, const BiPoly& p) { acc += p; });
}

BiPoly modified_tkr(const CellComplex& k, int j, const EnumOptions& opts) {
  require_level(k, j);
  const IntMat& d = k.boundary(j);
  const int full_rank = rank_of(d);
  return fold_subsets<BiPoly>(
      k.f(j), opts, BiPoly(),
      [&](std::uint64_t mask, BiPoly& acc) {
        SmithForm s = smith_normal_form(d.select_columns_mask(mask));
        Int weight = 1;
        for (const Int& v : s.invariant_factors)
          if (v > 1) weight *= v * v;
        acc.add_term(full_rank - s.rank, std::popcount(mask) - s.rank, weight);
      },
      [](BiPoly& acc, const BiPoly& p) { acc += p; });
}

UniPoly bott_direct(const CellComplex& k, const EnumOptions& opts) {
  const int kdim = k.dim();
  if (kdim < 1) fail("OutOfRange", "the alternating top sum needs dimension at least 1");
  const IntMat& d = k.boundary(kdim);
  const int f_k = static_cast<int>(k.f(kdim));
  return fold_subsets<UniPoly>(
      k.f(kdim), opts, UniPoly(),
      [&](std::uint64_t mask, UniPoly& acc) {
        int r = rank_of(d.select_columns_mask(mask));
        int size = std::popcount(mask);
        acc.add_term(size - r, (f_k - size) % 2 == 0 ? Int(1) : Int(-1));
      },
      [](UniPoly& acc, const UniPoly& p) {
        for (const auto& [e, c] : p.terms()) acc.add_term(e, c);
      });
}

UniPoly bott_via_tkr(const CellComplex& k, const EnumOptions& opts) {
  const int kdim = k.dim();
  if (kdim < 1) fail("OutOfRange", "the alternating top sum needs dimension at least 1");
  BiPoly top = tkr_polynomial(k, kdim, opts);
  return to_bott_substitution(top, betti_number(k, kdim));
}

BiPoly manifold_closed_form(int f_k, ManifoldKind kind) {
  if (kind == ManifoldKind::none)
    fail("OutOfRange", "closed form applies only to manifold complexes");
  if (f_k < 0) fail("OutOfRange", "negative cell count");
  if (kind == ManifoldKind::other) return one_plus_x_power(f_k);
  BiPoly numerator = one_plus_x_power(f_k) - BiPoly::constant(1);
  return BiPoly::var_y() + numerator.divided_by_x();
}

}  // namespace tkr
