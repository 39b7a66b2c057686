#include "tkr/cell_complex.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

#include "tkr/errors.hpp"

namespace tkr {

CellComplex::CellComplex(std::string name, std::vector<std::vector<std::string>> ids,
                         std::vector<IntMat> boundaries, std::vector<IncidenceHints> hints)
    : name_(std::move(name)), ids_(std::move(ids)) {
  if (ids_.empty()) fail("DimensionMismatch", "a complex needs at least dimension 0");
  const std::size_t k = ids_.size() - 1;
  if (boundaries.size() != k)
    fail("DimensionMismatch", "expected one boundary matrix per dimension 1..dim");
  if (!hints.empty() && hints.size() != k)
    fail("DimensionMismatch", "expected one hint set per dimension 1..dim");
  d_.resize(k + 1);
  d_[0] = IntMat(0, ids_[0].size());
  for (std::size_t j = 1; j <= k; ++j) d_[j] = std::move(boundaries[j - 1]);
  hints_.resize(k + 1);
  for (std::size_t j = 1; j <= k && !hints.empty(); ++j) hints_[j] = std::move(hints[j - 1]);
}

std::size_t CellComplex::total_cells() const {
  std::size_t n = 0;
  for (const auto& v : ids_) n += v.size();
  return n;
}

bool CellComplex::incident(int j, int row, int col) const {
  if (d_[j].at(row, col) != 0) return true;
  return hints_[j].count({row, col}) > 0;
}

std::vector<int> CellComplex::faces_of(int j, int col) const {
  std::vector<int> rows;
  for (std::size_t r = 0; r < d_[j].rows(); ++r)
    if (incident(j, static_cast<int>(r), col)) rows.push_back(static_cast<int>(r));
  return rows;
}

int CellComplex::index_of(int j, const std::string& id) const {
  if (j < 0 || j > dim()) return -1;
  for (std::size_t i = 0; i < ids_[j].size(); ++i)
    if (ids_[j][i] == id) return static_cast<int>(i);
  return -1;
}

CellComplex CellComplex::with_name(std::string new_name) const {
  CellComplex c = *this;
  c.name_ = std::move(new_name);
  return c;
}

ValidationResult validate(const CellComplex& k) {
  for (int j = 1; j <= k.dim(); ++j) {
    const IntMat& d = k.boundary(j);
    if (d.rows() != k.f(j - 1) || d.cols() != k.f(j))
      return {false, "DimensionMismatch",
              "boundary matrix at dimension " + std::to_string(j) + " has shape " +
                  std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                  ", expected " + std::to_string(k.f(j - 1)) + "x" + std::to_string(k.f(j))};
    for (const auto& [row, col] : k.hints(j))
      if (row < 0 || col < 0 || row >= static_cast<int>(d.rows()) ||
          col >= static_cast<int>(d.cols()))
        return {false, "DimensionMismatch",
                "incidence hint out of range at dimension " + std::to_string(j)};
  }
  for (int j = 0; j <= k.dim(); ++j) {
    std::set<std::string> seen;
    for (const auto& id : k.cells(j))
      if (!seen.insert(id).second)
        return {false, "DuplicateId",
                "cell id '" + id + "' repeats in dimension " + std::to_string(j)};
  }
  for (int j = 2; j <= k.dim(); ++j) {
    IntMat prod = k.boundary(j - 1) * k.boundary(j);
    if (!prod.is_zero())
      return {false, "BoundarySquareNonzero",
              "boundary of boundary is nonzero between dimensions " + std::to_string(j) +
                  " and " + std::to_string(j - 2)};
  }
  return {true, "", ""};
}

void require_valid_shapes(const CellComplex& k) {
  ValidationResult v = validate(k);
  if (!v.ok) fail(v.code, v.message);
}

CellComplex skeleton(const CellComplex& k, int j) {
  if (j < 0 || j > k.dim()) fail("OutOfRange", "skeleton dimension out of range");
  std::vector<std::vector<std::string>> ids;
  std::vector<IntMat> bds;
  std::vector<IncidenceHints> hints;
  for (int d = 0; d <= j; ++d) {
    ids.push_back(k.cells(d));
    if (d >= 1) {
      bds.push_back(k.boundary(d));
      hints.push_back(k.hints(d));
    }
  }
  return CellComplex(k.name() + "_skel" + std::to_string(j), std::move(ids), std::move(bds),
                     std::move(hints));
}

std::vector<CellRef> closure(const CellComplex& k, CellRef c) {
  if (!k.contains(c)) fail("OutOfRange", "closure of a cell not in the complex");
  std::set<CellRef> seen{c};
  std::vector<CellRef> stack{c};
  while (!stack.empty()) {
    CellRef cur = stack.back();
    stack.pop_back();
    if (cur.dim == 0) continue;
    for (int r : k.faces_of(cur.dim, cur.index)) {
      CellRef face{cur.dim - 1, r};
      if (seen.insert(face).second) stack.push_back(face);
    }
  }
  return {seen.begin(), seen.end()};
}

CellComplex delete_cell(const CellComplex& k, CellRef c) {
  if (!k.contains(c)) fail("OutOfRange", "deleting a cell not in the complex");
  const int j = c.dim;
  if (j < k.dim()) {
    const IntMat& up = k.boundary(j + 1);
    for (std::size_t col = 0; col < up.cols(); ++col)
      if (k.incident(j + 1, c.index, static_cast<int>(col)))
        fail("NotDeletable", "cell '" + k.id_of(c) + "' is a face of '" +
                                 k.cells(j + 1)[col] + "'");
  }
  std::vector<std::vector<std::string>> ids;
  std::vector<IntMat> bds;
  std::vector<IncidenceHints> hints;
  for (int d = 0; d <= k.dim(); ++d) {
    std::vector<std::string> row = k.cells(d);
    if (d == j) row.erase(row.begin() + c.index);
    ids.push_back(std::move(row));
  }
  for (int d = 1; d <= k.dim(); ++d) {
    IntMat m = k.boundary(d);
    IncidenceHints h;
    for (auto [r, col] : k.hints(d)) {
      if (d == j && col == c.index) continue;
      if (d == j + 1 && r == c.index) continue;  // unreachable given the precondition
      if (d == j && col > c.index) --col;
      if (d == j + 1 && r > c.index) --r;
      h.insert({r, col});
    }
    if (d == j) m = m.drop_column(c.index);
    if (d == j + 1) m = m.drop_row(c.index);
    bds.push_back(std::move(m));
    hints.push_back(std::move(h));
  }
  return CellComplex(k.name() + "_del_" + k.id_of(c), std::move(ids), std::move(bds),
                     std::move(hints));
}

namespace {

std::string fresh_basepoint_id(const std::vector<std::string>& taken) {
  std::string id = "*";
  while (std::find(taken.begin(), taken.end(), id) != taken.end()) id += "*";
  return id;
}

}  // namespace

CellComplex contract_closure(const CellComplex& k, CellRef c) {
  std::vector<CellRef> cl = closure(k, c);
  std::vector<std::set<int>> dropped(k.dim() + 1);
  for (CellRef r : cl) dropped[r.dim].insert(r.index);

  // old index -> new index per dimension (0-cells shift by one for the basepoint)
  std::vector<std::vector<int>> remap(k.dim() + 1);
  std::vector<std::vector<std::string>> ids(k.dim() + 1);
  for (int d = 0; d <= k.dim(); ++d) {
    remap[d].assign(k.f(d), -1);
    if (d == 0) ids[0].push_back("");  // basepoint slot, named below
    for (std::size_t i = 0; i < k.f(d); ++i) {
      if (dropped[d].count(static_cast<int>(i))) continue;
      remap[d][i] = static_cast<int>(ids[d].size());
      ids[d].push_back(k.cells(d)[i]);
    }
  }
  ids[0][0] = fresh_basepoint_id(ids[0]);

  std::vector<IntMat> bds;
  std::vector<IncidenceHints> hints;
  for (int d = 1; d <= k.dim(); ++d) {
    const IntMat& old = k.boundary(d);
    IntMat m(ids[d - 1].size(), ids[d].size());
    IncidenceHints h;
    for (std::size_t col = 0; col < k.f(d); ++col) {
      int nc = remap[d][col];
      if (nc < 0) continue;
      bool touches_dropped = false;
      Int dropped_mass = 0;
      for (std::size_t row = 0; row < k.f(d - 1); ++row) {
        int nr = remap[d - 1][row];
        if (nr < 0) {
          if (k.incident(d, static_cast<int>(row), static_cast<int>(col))) {
            touches_dropped = true;
            dropped_mass += old.at(row, col);
          }
          continue;
        }
        m.at(nr, nc) = old.at(row, col);
        if (k.hints(d).count({static_cast<int>(row), static_cast<int>(col)}))
          h.insert({nr, nc});
      }
      if (d == 1 && touches_dropped) {
        // Coefficient mass aimed at collapsed endpoints lands on the basepoint,
        // keeping each column's total untouched.
        m.at(0, nc) = dropped_mass;
        if (dropped_mass == 0) h.insert({0, nc});
      }
    }
    bds.push_back(std::move(m));
    hints.push_back(std::move(h));
  }
  return CellComplex(k.name() + "_contr_" + k.id_of(c), std::move(ids), std::move(bds),
                     std::move(hints));
}

CellComplex collapse(const CellComplex& k, CellRef sigma, CellRef tau) {
  if (!k.contains(sigma) || !k.contains(tau))
    fail("OutOfRange", "collapse of cells not in the complex");
  if (tau.dim != sigma.dim - 1)
    fail("NotFreeFace", "collapse needs a face one dimension below the cell");
  const int d = sigma.dim;
  const Int& coef = k.boundary(d).at(tau.index, sigma.index);
  if (coef != 1 && coef != -1)
    fail("NotFreeFace", "face '" + k.id_of(tau) + "' carries coefficient " + coef.str() +
                            ", need 1 or -1");
  for (std::size_t col = 0; col < k.f(d); ++col)
    if (static_cast<int>(col) != sigma.index && k.incident(d, tau.index, static_cast<int>(col)))
      fail("NotFreeFace", "face '" + k.id_of(tau) + "' also supports '" +
                              k.cells(d)[col] + "'");
  if (d < k.dim())
    for (std::size_t col = 0; col < k.f(d + 1); ++col)
      if (k.incident(d + 1, sigma.index, static_cast<int>(col)))
        fail("NotFreeFace", "cell '" + k.id_of(sigma) + "' itself supports '" +
                                k.cells(d + 1)[col] + "'");

  std::vector<std::vector<std::string>> ids;
  std::vector<IntMat> bds;
  std::vector<IncidenceHints> hints;
  for (int dd = 0; dd <= k.dim(); ++dd) {
    std::vector<std::string> row = k.cells(dd);
    if (dd == d) row.erase(row.begin() + sigma.index);
    if (dd == d - 1) row.erase(row.begin() + tau.index);
    ids.push_back(std::move(row));
  }
  for (int dd = 1; dd <= k.dim(); ++dd) {
    IntMat m = k.boundary(dd);
    IncidenceHints h;
    for (auto [r, col] : k.hints(dd)) {
      if (dd == d && (col == sigma.index || r == tau.index)) continue;
      if (dd == d + 1 && r == sigma.index) continue;
      if (dd == d - 1 && col == tau.index) continue;
      if (dd == d && col > sigma.index) --col;
      if (dd == d && r > tau.index) --r;
      if (dd == d + 1 && r > sigma.index) --r;
      if (dd == d - 1 && col > tau.index) --col;
      h.insert({r, col});
    }
    if (dd == d) m = m.drop_column(sigma.index).drop_row(tau.index);
    if (dd == d + 1) m = m.drop_row(sigma.index);
    if (dd == d - 1) m = m.drop_column(tau.index);
    bds.push_back(std::move(m));
    hints.push_back(std::move(h));
  }
  return CellComplex(k.name() + "_coll_" + k.id_of(sigma), std::move(ids), std::move(bds),
                     std::move(hints));
}

CellComplex subcomplex_from_cells(const CellComplex& k, const std::vector<CellRef>& cells,
                                  int forced_dim, std::string name) {
  std::vector<std::set<int>> keep(k.dim() + 1);
  for (CellRef c : cells) {
    if (!k.contains(c)) fail("OutOfRange", "subcomplex cell not in the complex");
    keep[c.dim].insert(c.index);
  }
  for (int d = 1; d <= k.dim(); ++d)
    for (int col : keep[d])
      for (int r : k.faces_of(d, col))
        if (!keep[d - 1].count(r))
          fail("NotClosed", "subcomplex cell set is not downward closed");
  if (forced_dim < 0 || forced_dim > k.dim())
    fail("OutOfRange", "subcomplex dimension out of range");
  for (int d = forced_dim + 1; d <= k.dim(); ++d)
    if (!keep[d].empty()) fail("OutOfRange", "subcomplex has cells above its dimension");

  std::vector<std::vector<int>> remap(k.dim() + 1);
  std::vector<std::vector<std::string>> ids(forced_dim + 1);
  for (int d = 0; d <= forced_dim; ++d) {
    remap[d].assign(k.f(d), -1);
    for (std::size_t i = 0; i < k.f(d); ++i)
      if (keep[d].count(static_cast<int>(i))) {
        remap[d][i] = static_cast<int>(ids[d].size());
        ids[d].push_back(k.cells(d)[i]);
      }
  }
  std::vector<IntMat> bds;
  std::vector<IncidenceHints> hints;
  for (int d = 1; d <= forced_dim; ++d) {
    IntMat m(ids[d - 1].size(), ids[d].size());
    IncidenceHints h;
    for (std::size_t col = 0; col < k.f(d); ++col) {
      if (remap[d][col] < 0) continue;
      for (std::size_t row = 0; row < k.f(d - 1); ++row) {
        if (remap[d - 1][row] < 0) continue;
        m.at(remap[d - 1][row], remap[d][col]) = k.boundary(d).at(row, col);
        if (k.hints(d).count({static_cast<int>(row), static_cast<int>(col)}))
          h.insert({remap[d - 1][row], remap[d][col]});
      }
    }
    bds.push_back(std::move(m));
    hints.push_back(std::move(h));
  }
  return CellComplex(std::move(name), std::move(ids), std::move(bds), std::move(hints));
}

long long euler_characteristic(const CellComplex& k) {
  long long chi = 0;
  for (int j = 0; j <= k.dim(); ++j)
    chi += (j % 2 == 0 ? 1 : -1) * static_cast<long long>(k.f(j));
  return chi;
}

std::string structural_key(const CellComplex& k) {
  std::ostringstream out;
  out << "dim " << k.dim() << ';';
  for (int j = 0; j <= k.dim(); ++j) out << k.f(j) << ',';
  for (int j = 1; j <= k.dim(); ++j) {
    out << "|d" << j << ':';
    const IntMat& m = k.boundary(j);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        const Int& v = m.at(r, c);
        if (v != 0) out << r << ' ' << v << ' ';
        else if (k.hints(j).count({static_cast<int>(r), static_cast<int>(c)}))
          out << r << " h ";
      }
      out << ';';
    }
  }
  return out.str();
}

std::string canonical_key(const CellComplex& k) {
  // Sort cells of each dimension by a row-identity-free summary of their
  // boundary column, so relabeled copies of a complex usually share a key.
  std::vector<std::vector<int>> order(k.dim() + 1);
  for (int j = 0; j <= k.dim(); ++j) {
    order[j].resize(k.f(j));
    std::iota(order[j].begin(), order[j].end(), 0);
    if (j == 0) continue;
    std::vector<std::string> desc(k.f(j));
    for (std::size_t c = 0; c < k.f(j); ++c) {
      std::vector<std::string> entries;
      for (std::size_t r = 0; r < k.f(j - 1); ++r) {
        const Int& v = k.boundary(j).at(r, c);
        if (v != 0) entries.push_back(v.str());
        else if (k.hints(j).count({static_cast<int>(r), static_cast<int>(c)}))
          entries.push_back("h");
      }
      std::sort(entries.begin(), entries.end());
      std::string s;
      for (const auto& e : entries) s += e + ",";
      desc[c] = s;
    }
    std::stable_sort(order[j].begin(), order[j].end(),
                     [&](int a, int b) { return desc[a] < desc[b]; });
  }
  // Row order must match the permuted ordering of the dimension below, so
  // serialize with the permutation applied to rows and columns alike.
  std::vector<std::vector<int>> inverse(k.dim() + 1);
  for (int j = 0; j <= k.dim(); ++j) {
    inverse[j].resize(k.f(j));
    for (std::size_t i = 0; i < k.f(j); ++i) inverse[j][order[j][i]] = static_cast<int>(i);
  }
  std::ostringstream out;
  out << "dim " << k.dim() << ';';
  for (int j = 0; j <= k.dim(); ++j) out << k.f(j) << ',';
  for (int j = 1; j <= k.dim(); ++j) {
    out << "|d" << j << ':';
    const IntMat& m = k.boundary(j);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::size_t col = order[j][c];
      std::vector<std::pair<int, std::string>> entries;
      for (std::size_t row = 0; row < m.rows(); ++row) {
        const Int& v = m.at(row, col);
        if (v != 0)
          entries.push_back({inverse[j - 1][row], v.str()});
        else if (k.hints(j).count({static_cast<int>(row), static_cast<int>(col)}))
          entries.push_back({inverse[j - 1][row], "h"});
      }
      std::sort(entries.begin(), entries.end());
      for (const auto& [r, v] : entries) out << r << ' ' << v << ' ';
      out << ';';
    }
  }
  return out.str();
}

int SpanningSubcomplex::count() const { return std::popcount(mask); }

IntMat SpanningSubcomplex::restricted_boundary() const {
  return parent->boundary(j).select_columns_mask(mask);
}

std::vector<std::string> SpanningSubcomplex::cell_ids() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < parent->f(j); ++i)
    if (contains_cell(static_cast<int>(i))) out.push_back(parent->cells(j)[i]);
  return out;
}

CellComplex realize(const SpanningSubcomplex& s, std::string name) {
  const CellComplex& k = *s.parent;
  std::vector<CellRef> cells;
  for (int d = 0; d < s.j; ++d)
    for (std::size_t i = 0; i < k.f(d); ++i) cells.push_back({d, static_cast<int>(i)});
  for (std::size_t i = 0; i < k.f(s.j); ++i)
    if (s.contains_cell(static_cast<int>(i))) cells.push_back({s.j, static_cast<int>(i)});
  return subcomplex_from_cells(k, cells, s.j, std::move(name));
}

}  // namespace tkr
