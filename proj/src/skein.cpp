#include "tkr/skein.hpp"

#include <map>

#include "tkr/errors.hpp"
#include "tkr/homology.hpp"
#include "tkr/snf.hpp"
#include "tkr/tkr_poly.hpp"

namespace tkr {

namespace {

// The attaching boundary of sigma as a standalone complex of dimension
// dim(sigma) - 1: its closure minus the cell itself.
CellComplex attaching_boundary(const CellComplex& k, CellRef sigma) {
  std::vector<CellRef> cells = closure(k, sigma);
  std::erase(cells, sigma);
  return subcomplex_from_cells(k, cells, sigma.dim - 1, k.name() + "_bd_" + k.id_of(sigma));
}

}  // namespace

CellClass classify_cell(const CellComplex& k, CellRef sigma) {
  if (!k.contains(sigma)) fail("OutOfRange", "classifying a cell not in the complex");
  if (sigma.dim != k.dim())
    fail("NotTopCell", "classification applies to top-dimensional cells only");
  const int kd = k.dim();
  const IntMat& d = k.boundary(kd);

  CellClass c;
  c.is_loop = d.column_is_zero(sigma.index);
  c.is_bridge = rank_of(d) == rank_of(d.drop_column(sigma.index)) + 1;

  if (kd >= 1) {
    CellComplex bd = attaching_boundary(k, sigma);
    HomologySummary h = homology(bd, kd - 1, true);
    c.boundary_regular = h.betti == 1 && h.torsion_factors.empty();
  }

  for (std::size_t r = 0; r < k.f(kd - 1); ++r) {
    const Int& coef = d.at(r, sigma.index);
    if (coef != 1 && coef != -1) continue;
    bool shared = false;
    for (std::size_t col = 0; col < k.f(kd) && !shared; ++col)
      if (static_cast<int>(col) != sigma.index &&
          k.incident(kd, static_cast<int>(r), static_cast<int>(col)))
        shared = true;
    if (!shared) c.free_faces.push_back({kd - 1, static_cast<int>(r)});
  }
  return c;
}

SkeinReport verify_skein(const CellComplex& k, CellRef sigma, const EnumOptions& opts) {
  SkeinReport rep;
  rep.cls = classify_cell(k, sigma);
  rep.lhs = tkr_polynomial(k, k.dim(), opts);

  const BiPoly x1 = BiPoly::var_x() + BiPoly::constant(1);
  const BiPoly y1 = BiPoly::var_y() + BiPoly::constant(1);

  if (rep.cls.is_loop) {
    rep.kind = SkeinCase::loop;
    rep.applicable = true;
    rep.deletion_part = tkr_polynomial(delete_cell(k, sigma), k.dim(), opts);
    rep.rhs = y1 * rep.deletion_part;
  } else if (rep.cls.is_bridge && rep.cls.boundary_regular) {
    rep.kind = SkeinCase::bridge;
    rep.applicable = true;
    rep.contraction_part = tkr_polynomial(contract_closure(k, sigma), k.dim(), opts);
    rep.rhs = x1 * rep.contraction_part;
  } else if (!rep.cls.is_bridge && rep.cls.boundary_regular) {
    rep.kind = SkeinCase::del_contract;
    rep.applicable = true;
    rep.deletion_part = tkr_polynomial(delete_cell(k, sigma), k.dim(), opts);
    rep.contraction_part = tkr_polynomial(contract_closure(k, sigma), k.dim(), opts);
    rep.rhs = rep.deletion_part + rep.contraction_part;
  } else {
    rep.kind = SkeinCase::not_applicable;
    rep.applicable = false;
    rep.deletion_part = tkr_polynomial(delete_cell(k, sigma), k.dim(), opts);
    rep.contraction_part = tkr_polynomial(contract_closure(k, sigma), k.dim(), opts);
    rep.rhs = rep.deletion_part + rep.contraction_part;
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

namespace {

struct Evaluator {
  const EnumOptions& opts;
  SkeinTrace* trace;
  std::map<std::string, BiPoly> cache;

  void log(int depth, const std::string& line) {
    if (trace) trace->lines.push_back(std::string(2 * depth, ' ') + line);
  }

  BiPoly eval(const CellComplex& k, int depth) {
    std::string key = canonical_key(k);
    auto it = cache.find(key);
    if (it != cache.end()) {
      log(depth, "reuse cached result");
      return it->second;
    }
    BiPoly result = rewrite(k, depth);
    cache.emplace(std::move(key), result);
    return result;
  }

  BiPoly rewrite(const CellComplex& k, int depth) {
    const int kd = k.dim();
    const BiPoly x1 = BiPoly::var_x() + BiPoly::constant(1);
    const BiPoly y1 = BiPoly::var_y() + BiPoly::constant(1);
    for (std::size_t i = 0; i < k.f(kd); ++i) {
      CellRef sigma{kd, static_cast<int>(i)};
      CellClass c = classify_cell(k, sigma);
      if (c.is_loop) {
        log(depth, "(ii) loop " + k.id_of(sigma) + " -> delete");
        return y1 * eval(delete_cell(k, sigma), depth + 1);
      }
      if (c.is_bridge && !c.free_faces.empty()) {
        CellRef tau = c.free_faces.front();
        log(depth, "(iii) bridge " + k.id_of(sigma) + " -> collapse across " + k.id_of(tau));
        return x1 * eval(collapse(k, sigma, tau), depth + 1);
      }
      if (c.is_bridge && c.boundary_regular) {
        log(depth, "(iii) bridge " + k.id_of(sigma) + " -> contract closure");
        return x1 * eval(contract_closure(k, sigma), depth + 1);
      }
      if (!c.is_bridge && c.boundary_regular) {
        log(depth, "(i) " + k.id_of(sigma) + " -> contract + delete");
        return eval(contract_closure(k, sigma), depth + 1) +
               eval(delete_cell(k, sigma), depth + 1);
      }
    }
    log(depth, "enumerate over " + std::to_string(k.f(kd)) + " top cells");
    return tkr_polynomial(k, kd, opts);
  }
};

}  // namespace

BiPoly skein_evaluate(const CellComplex& k, const EnumOptions& opts, SkeinTrace* trace) {
  if (k.dim() < 1) fail("OutOfRange", "rewriting needs dimension at least 1");
  Evaluator ev{opts, trace, {}};
  return ev.eval(k, 0);
}

}  // namespace tkr
