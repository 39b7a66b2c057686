#include "tkr/homology.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "tkr/errors.hpp"

namespace tkr {

namespace {

IntMat augmentation_row(std::size_t f0) {
  IntMat m(1, f0);
  for (std::size_t j = 0; j < f0; ++j) m.at(0, j) = 1;
  return m;
}

HomologySummary summarize(int degree, bool reduced, std::size_t f_d, int rank_out,
                          const SmithForm& incoming) {
  HomologySummary h;
  h.degree = degree;
  h.reduced = reduced;
  h.betti = static_cast<int>(f_d) - rank_out - incoming.rank;
  for (const Int& v : incoming.invariant_factors)
    if (v > 1) {
      h.torsion_factors.push_back(v);
      h.torsion_order *= v;
    }
  return h;
}

// Whole-complex results are memoized; keys are structure-only, so renamed
// copies of a complex share entries.
struct MemoKey {
  std::string structure;
  int degree;
  bool reduced;
  bool operator<(const MemoKey& o) const {
    if (structure != o.structure) return structure < o.structure;
    if (degree != o.degree) return degree < o.degree;
    return reduced < o.reduced;
  }
};

std::mutex memo_mutex;
std::map<MemoKey, HomologySummary> memo;

}  // namespace

HomologySummary homology(const CellComplex& k, int degree, bool reduced) {
  if (degree < 0 || degree > k.dim())
    fail("OutOfRange", "homology degree " + std::to_string(degree) +
                           " outside 0.." + std::to_string(k.dim()));
  MemoKey key{structural_key(k), degree, reduced};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  int rank_out = degree == 0 ? (reduced && k.f(0) > 0 ? 1 : 0) : rank_of(k.boundary(degree));
  SmithForm incoming =
      degree == k.dim() ? SmithForm{} : smith_normal_form(k.boundary(degree + 1));
  HomologySummary h = summarize(degree, reduced, k.f(degree), rank_out, incoming);
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(std::move(key), h);
  return h;
}

HomologySummary homology(const SpanningSubcomplex& s, int degree, bool reduced) {
  const CellComplex& k = *s.parent;
  if (degree < 0 || degree > s.j)
    fail("OutOfRange", "homology degree " + std::to_string(degree) +
                           " outside 0.." + std::to_string(s.j));
  std::size_t f_d = degree == s.j ? static_cast<std::size_t>(s.count()) : k.f(degree);
  int rank_out;
  if (degree == 0)
    rank_out = reduced && f_d > 0 ? 1 : 0;
  else if (degree == s.j)
    rank_out = rank_of(s.restricted_boundary());
  else
    rank_out = rank_of(k.boundary(degree));
  SmithForm incoming;
  if (degree == s.j - 1)
    incoming = smith_normal_form(s.restricted_boundary());
  else if (degree < s.j - 1)
    incoming = smith_normal_form(k.boundary(degree + 1));
  return summarize(degree, reduced, f_d, rank_out, incoming);
}

std::vector<HomologySummary> all_homology(const CellComplex& k, bool reduced) {
  std::vector<HomologySummary> out;
  for (int d = 0; d <= k.dim(); ++d) out.push_back(homology(k, d, reduced));
  return out;
}

int betti_number(const CellComplex& k, int degree, bool reduced) {
  return homology(k, degree, reduced).betti;
}

int betti_number(const SpanningSubcomplex& s, int degree, bool reduced) {
  return homology(s, degree, reduced).betti;
}

Int torsion_weight(const SpanningSubcomplex& s) {
  Int order = 1;
  for (const Int& v : smith_normal_form(s.restricted_boundary()).invariant_factors)
    if (v > 1) order *= v;
  return order * order;
}

}  // namespace tkr
