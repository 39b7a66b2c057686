#include "tkr/matroid.hpp"

#include <bit>

#include "tkr/errors.hpp"
#include "tkr/homology.hpp"
#include "tkr/snf.hpp"
#include "tkr/tkr_poly.hpp"
#include "tkr/trees.hpp"

namespace tkr {

ColumnMatroid::ColumnMatroid(const CellComplex& k, int j) {
  if (j < 1 || j > k.dim()) fail("OutOfRange", "matroid level outside 1..dim");
  columns_ = k.boundary(j);
  n_ = static_cast<int>(columns_.cols());
  if (n_ > 62) fail("TooLarge", "matroid ground set exceeds 62 elements");
  full_rank_ = rank_of(columns_);
}

int ColumnMatroid::rank(std::uint64_t mask) const {
  auto it = rank_cache_.find(mask);
  if (it != rank_cache_.end()) return it->second;
  int r = rank_of(columns_.select_columns_mask(mask));
  rank_cache_.emplace(mask, r);
  return r;
}

bool ColumnMatroid::is_basis(std::uint64_t mask) const {
  return std::popcount(mask) == full_rank_ && rank(mask) == full_rank_;
}

namespace {

BiPoly tutte_minor(const ColumnMatroid& m, std::uint64_t live, std::uint64_t contracted,
                   std::map<std::pair<std::uint64_t, std::uint64_t>, BiPoly>& memo) {
  if (live == 0) return BiPoly::constant(1);
  auto key = std::make_pair(live, contracted);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  std::uint64_t e = live & (~live + 1);  // lowest set bit
  std::uint64_t rest = live ^ e;
  BiPoly result;
  if (m.rank(contracted | e) == m.rank(contracted)) {
    result = BiPoly::var_y() * tutte_minor(m, rest, contracted, memo);
  } else if (m.rank(live | contracted) == m.rank(rest | contracted) + 1) {
    result = BiPoly::var_x() * tutte_minor(m, rest, contracted | e, memo);
  } else {
    result = tutte_minor(m, rest, contracted, memo) +
             tutte_minor(m, rest, contracted | e, memo);
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

BiPoly tutte_deletion_contraction(const ColumnMatroid& m) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, BiPoly> memo;
  return tutte_minor(m, m.full_mask(), 0, memo);
}

BiPoly tutte_corank_nullity(const ColumnMatroid& m, const EnumOptions& opts) {
  const BiPoly xm1 = BiPoly::var_x() - BiPoly::constant(1);
  const BiPoly ym1 = BiPoly::var_y() - BiPoly::constant(1);
  std::vector<BiPoly> xpow{BiPoly::constant(1)}, ypow{BiPoly::constant(1)};
  for (int i = 1; i <= m.full_rank(); ++i) xpow.push_back(xpow.back() * xm1);
  for (int i = 1; i <= m.size(); ++i) ypow.push_back(ypow.back() * ym1);
  return fold_subsets<BiPoly>(
      m.size(), opts, BiPoly(),
      [&](std::uint64_t mask, BiPoly& acc) {
        int r = m.rank(mask);
        acc += xpow[m.full_rank() - r] * ypow[std::popcount(mask) - r];
      },
      [](BiPoly& acc, const BiPoly& p) { acc += p; });
}

std::vector<std::uint64_t> matroid_bases(const ColumnMatroid& m, const EnumOptions& opts) {
  check_enumeration_size(m.size(), opts);
  std::vector<std::uint64_t> out;
  const std::uint64_t total = std::uint64_t(1) << m.size();
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (std::popcount(mask) == m.full_rank() && m.rank(mask) == m.full_rank())
      out.push_back(mask);
  return out;
}

Activities activities(const ColumnMatroid& m, std::uint64_t basis) {
  if (!m.is_basis(basis)) fail("NotABasis", "activity of a non-basis");
  Activities a;
  for (int e = 0; e < m.size(); ++e) {
    std::uint64_t ebit = std::uint64_t(1) << e;
    if (basis & ebit) {
      // Internally active: no earlier outside element can replace e.
      bool active = true;
      for (int f = 0; f < e && active; ++f) {
        std::uint64_t fbit = std::uint64_t(1) << f;
        if (!(basis & fbit) && m.is_basis((basis ^ ebit) | fbit)) active = false;
      }
      if (active) ++a.internal_count;
    } else {
      // Externally active: no earlier basis element can make room for e.
      bool active = true;
      for (int f = 0; f < e && active; ++f) {
        std::uint64_t fbit = std::uint64_t(1) << f;
        if ((basis & fbit) && m.is_basis((basis ^ fbit) | ebit)) active = false;
      }
      if (active) ++a.external_count;
    }
  }
  return a;
}

Int basis_multiplicity(const CellComplex& k, int j, std::uint64_t basis) {
  return torsion_weight(SpanningSubcomplex{&k, j, basis});
}

MatroidCheckReport check_matroid_correspondence(const CellComplex& k, int j,
                                                const EnumOptions& opts) {
  MatroidCheckReport rep;
  ColumnMatroid m(k, j);
  BiPoly subset_poly = tkr_polynomial(k, j, opts);
  BiPoly tutte = tutte_deletion_contraction(m);
  rep.shift_identity = subset_poly == tutte.shifted(1, 1);

  if (is_apc(k)) {
    rep.bases_checked = true;
    std::vector<std::uint64_t> bases = matroid_bases(m, opts);
    std::vector<std::uint64_t> trees;
    for (const SpanningSubcomplex& s : enumerate_csts(k, j, opts)) trees.push_back(s.mask);
    rep.bases_match_trees = bases == trees;  // both enumerate masks ascending
  }

  BiPoly expansion;
  for (std::uint64_t b : matroid_bases(m, opts)) {
    Activities a = activities(m, b);
    expansion.add_term(a.internal_count, a.external_count, 1);
  }
  rep.activities_expansion = expansion == subset_poly.shifted(-1, -1);
  return rep;
}

}  // namespace tkr
