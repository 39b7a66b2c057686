#include "tkr/duality.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tkr/catalog.hpp"
#include "tkr/complex_io.hpp"
#include "tkr/errors.hpp"
#include "tkr/homology.hpp"
#include "tkr/tkr_poly.hpp"

namespace tkr {

namespace {

DualPair make_pair_by_ids(CellComplex k, CellComplex k_star,
                          const std::vector<std::pair<std::string, std::string>>& matches) {
  DualPair p{std::move(k), std::move(k_star), {}};
  const int kd = p.k.dim();
  p.fwd.assign(kd + 1, {});
  for (int j = 0; j <= kd; ++j) p.fwd[j].assign(p.k.f(j), -1);
  for (const auto& [a, b] : matches) {
    int j = -1, ia = -1;
    for (int d = 0; d <= kd && j < 0; ++d) {
      ia = p.k.index_of(d, a);
      if (ia >= 0) j = d;
    }
    if (j < 0) fail("UnknownName", "pair references unknown cell '" + a + "'");
    int ib = p.k_star.index_of(kd - j, b);
    if (ib < 0)
      fail("UnknownName", "pair references unknown dual " + std::to_string(kd - j) +
                              "-cell '" + b + "'");
    if (p.fwd[j][ia] != -1) fail("ParseError", "cell '" + a + "' is paired twice");
    p.fwd[j][ia] = ib;
  }
  return p;
}

DualPair make_tetrahedron_self_pair() {
  BuiltinInfo info = builtin("tetrahedron-boundary");
  std::vector<std::pair<std::string, std::string>> matches = {
      {"v0", "t123"}, {"v1", "t023"}, {"v2", "t013"}, {"v3", "t012"},
      {"e01", "e23"}, {"e02", "e13"}, {"e03", "e12"},
      {"e12", "e03"}, {"e13", "e02"}, {"e23", "e01"},
      {"t012", "v3"}, {"t013", "v2"}, {"t023", "v1"}, {"t123", "v0"},
  };
  return make_pair_by_ids(info.complex, info.complex, matches);
}

DualPair make_cube_octahedron_pair() {
  CellComplex cube = builtin("cube-surface").complex;
  CellComplex octa = builtin("octahedron-surface").complex;
  std::vector<std::pair<std::string, std::string>> matches = {
      {"v000", "mxmymz"}, {"v001", "mxmypz"}, {"v010", "mxpymz"}, {"v011", "mxpypz"},
      {"v100", "pxmymz"}, {"v101", "pxmypz"}, {"v110", "pxpymz"}, {"v111", "pxpypz"},
      {"ex00", "mymz"}, {"ex01", "mypz"}, {"ex10", "pymz"}, {"ex11", "pypz"},
      {"ey00", "mxmz"}, {"ey01", "mxpz"}, {"ey10", "pxmz"}, {"ey11", "pxpz"},
      {"ez00", "mxmy"}, {"ez01", "mxpy"}, {"ez10", "pxmy"}, {"ez11", "pxpy"},
      {"fx0", "mx"}, {"fx1", "px"}, {"fy0", "my"}, {"fy1", "py"},
      {"fz0", "mz"}, {"fz1", "pz"},
  };
  return make_pair_by_ids(std::move(cube), std::move(octa), matches);
}

DualPair make_theta_triangle_pair() {
  CellComplex theta = builtin("theta-complex").complex;
  CellComplex tri = builtin("triangle-complex").complex;
  std::vector<std::pair<std::string, std::string>> matches = {
      {"p", "P"}, {"q", "Q"},
      {"a", "da"}, {"b", "db"}, {"c", "dc"},
      {"fab", "A"}, {"fbc", "B"}, {"fca", "C"},
  };
  return make_pair_by_ids(std::move(theta), std::move(tri), matches);
}

CellComplex resolve_complex_ref(const std::string& ref, const std::filesystem::path& base) {
  if (is_builtin_name(ref)) return builtin(ref).complex;
  std::filesystem::path p(ref);
  if (p.is_relative()) p = base / p;
  return load_complex_file(p.string());
}

}  // namespace

const std::vector<std::string>& builtin_pair_names() {
  static const std::vector<std::string> names = {
      "tetrahedron-self",
      "cube-octahedron",
      "theta-triangle",
  };
  return names;
}

bool is_builtin_pair_name(const std::string& name) {
  const auto& names = builtin_pair_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

DualPair builtin_pair(const std::string& name) {
  if (name == "tetrahedron-self") return make_tetrahedron_self_pair();
  if (name == "cube-octahedron") return make_cube_octahedron_pair();
  if (name == "theta-triangle") return make_theta_triangle_pair();
  fail("UnknownName", "no builtin dual pair named '" + name + "'");
}

DualPair load_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("UnknownName", "cannot open pair file '" + path + "'");
  std::filesystem::path base = std::filesystem::path(path).parent_path();

  std::string line;
  int line_no = 0;
  bool have_header = false;
  CellComplex k, k_star;
  std::vector<std::pair<std::string, std::string>> matches;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "dual") {
      if (have_header || toks.size() != 3)
        fail("ParseError", "line " + std::to_string(line_no) + ": expected: dual <K> <K-dual>");
      k = resolve_complex_ref(toks[1], base);
      k_star = resolve_complex_ref(toks[2], base);
      have_header = true;
      continue;
    }
    if (!have_header)
      fail("ParseError", "line " + std::to_string(line_no) + ": pair file must start with a dual header");
    if (toks.size() != 3 || toks[1] != "~")
      fail("ParseError", "line " + std::to_string(line_no) + ": expected: <cell-id> ~ <cell-id>");
    matches.push_back({toks[0], toks[2]});
  }
  if (!have_header) fail("ParseError", "pair file has no dual header");
  DualPair p = make_pair_by_ids(std::move(k), std::move(k_star), matches);
  ValidationResult v = validate_pair(p);
  if (!v.ok) fail(v.code, v.message);
  return p;
}

ValidationResult validate_pair(const DualPair& p) {
  ValidationResult v = validate(p.k);
  if (!v.ok) return v;
  v = validate(p.k_star);
  if (!v.ok) return v;
  const int kd = p.k.dim();
  if (p.k_star.dim() != kd)
    return {false, "DimensionMismatch", "pair members have different dimensions"};
  for (int j = 0; j <= kd; ++j) {
    if (p.k.f(j) != p.k_star.f(kd - j))
      return {false, "DimensionMismatch",
              "cell counts at level " + std::to_string(j) + " do not transpose"};
    if (p.fwd.size() != static_cast<std::size_t>(kd + 1) ||
        p.fwd[j].size() != p.k.f(j))
      return {false, "DimensionMismatch", "correspondence table shape mismatch"};
    std::vector<bool> hit(p.k_star.f(kd - j), false);
    for (int img : p.fwd[j]) {
      if (img < 0 || img >= static_cast<int>(p.k_star.f(kd - j)))
        return {false, "ParseError", "correspondence misses a cell at level " + std::to_string(j)};
      if (hit[img])
        return {false, "ParseError", "correspondence repeats a dual cell at level " + std::to_string(j)};
      hit[img] = true;
    }
  }
  for (const CellComplex* c : {&p.k, &p.k_star}) {
    for (int d = 0; d <= kd; ++d) {
      HomologySummary h = homology(*c, d, true);
      int expected = d == kd ? 1 : 0;
      if (h.betti != expected || !h.torsion_factors.empty())
        return {false, "NotASphere",
                "pair member '" + c->name() + "' is not a homology sphere at degree " +
                    std::to_string(d)};
    }
  }
  return {true, "", ""};
}

SpanningSubcomplex dual_subcomplex(const DualPair& p, const SpanningSubcomplex& s) {
  const int kd = p.k.dim();
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < p.k.f(s.j); ++i)
    if (!s.contains_cell(static_cast<int>(i)))
      mask |= std::uint64_t(1) << p.fwd[s.j][i];
  return SpanningSubcomplex{&p.k_star, kd - s.j, mask};
}

namespace {

// Level-0 subset polynomial with the augmentation as outgoing boundary;
// closed form over the vertex count.
BiPoly augmented_level0(std::size_t f0) {
  BiPoly p = BiPoly::var_x();
  std::vector<Int> binom{1};
  for (std::size_t s = 1; s <= f0; ++s) {
    binom.push_back(binom.back() * Int(f0 - s + 1) / Int(s));
    p.add_term(0, static_cast<int>(s) - 1, binom.back());
  }
  return p;
}

}  // namespace

DualityReport check_duality(const DualPair& p, int j, bool modified, const EnumOptions& opts) {
  const int kd = p.k.dim();
  if (modified ? (j < 1 || j > kd - 1) : (j < 1 || j > kd))
    fail("RangeError", modified ? "torsion-weighted duality needs 1 <= j <= dim-1"
                                : "duality needs 1 <= j <= dim");
  DualityReport rep;
  rep.lhs = modified ? modified_tkr(p.k, j, opts) : tkr_polynomial(p.k, j, opts);
  if (kd - j == 0)
    rep.rhs = augmented_level0(p.k_star.f(0));
  else
    rep.rhs = modified ? modified_tkr(p.k_star, kd - j, opts)
                       : tkr_polynomial(p.k_star, kd - j, opts);
  rep.equal = rep.lhs == rep.rhs.swapped();
  return rep;
}

AlexanderReport check_alexander_identities(const DualPair& p, int j, bool strict,
                                           const EnumOptions& opts) {
  const int kd = p.k.dim();
  if (j < 1 || j > kd - 1)
    fail("RangeError", "the complement identities need 1 <= j <= dim-1");
  check_enumeration_size(p.k.f(j), opts);
  AlexanderReport rep;
  const std::uint64_t total = std::uint64_t(1) << p.k.f(j);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SpanningSubcomplex s{&p.k, j, mask};
    SpanningSubcomplex sd = dual_subcomplex(p, s);
    ++rep.checked;

    HomologySummary top = homology(s, j, true);
    HomologySummary codim = homology(s, j - 1, true);
    HomologySummary dual_low = homology(sd, kd - j - 1, true);
    HomologySummary dual_top = homology(sd, kd - j, true);

    bool ok = top.betti == dual_low.betti && codim.betti == dual_top.betti;
    if (strict)
      ok = ok && codim.torsion_factors == dual_low.torsion_factors;
    else
      ok = ok && codim.torsion_order == dual_low.torsion_order;
    if (!ok) {
      ++rep.failures;
      if (rep.first_failure.empty()) {
        std::ostringstream msg;
        msg << "subset mask " << mask << ": (" << top.betti << "," << codim.betti << ","
            << codim.torsion_order << ") vs dual (" << dual_low.betti << ","
            << dual_top.betti << "," << dual_low.torsion_order << ")";
        rep.first_failure = msg.str();
      }
    }
  }
  rep.ok = rep.failures == 0;
  return rep;
}

}  // namespace tkr
