#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>

#include "test_support.hpp"
#include "tkr/catalog.hpp"
#include "tkr/cell_complex.hpp"
#include "tkr/complex_io.hpp"
#include "tkr/errors.hpp"
#include "tkr/random_complex.hpp"

using namespace tkr;

namespace {

CellComplex theta() { return builtin("theta-complex").complex; }
CellComplex s3c() { return builtin("sphere-three-cells").complex; }

std::string err_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("construction and accessors") {
  CellComplex k = theta();
  CHECK(k.dim() == 2);
  CHECK(k.f(0) == 2);
  CHECK(k.f(1) == 3);
  CHECK(k.f(2) == 3);
  CHECK(k.f(3) == 0);
  CHECK(k.total_cells() == 8);
  CHECK(k.index_of(1, "b") == 1);
  CHECK(k.index_of(1, "zz") == -1);
  CHECK(k.id_of(CellRef{2, 0}) == "fab");
  CHECK(k.contains(CellRef{2, 2}));
  CHECK(!k.contains(CellRef{3, 0}));
  CHECK(k.boundary(0).rows() == 0);
  CHECK(k.boundary(0).cols() == 2);
  CHECK(euler_characteristic(k) == 2);
}

TEST_CASE("validation rejects malformed input") {
  // Boundary-of-boundary nonzero: a square with one misoriented edge.
  CHECK(err_code([] {
          CellComplex bad(
              "bad", {{"p", "q"}, {"a", "b"}, {"F"}},
              {IntMat::from_rows({{-1, -1}, {1, 1}}),
               IntMat::from_rows({{1}, {1}})});
          ValidationResult r = validate(bad);
          if (!r.ok) fail(r.code, r.message);
        }) == "BoundarySquareNonzero");

  CHECK(err_code([] {
          CellComplex bad("bad", {{"p", "p"}}, {});
          ValidationResult r = validate(bad);
          if (!r.ok) fail(r.code, r.message);
        }) == "DuplicateId");

  CHECK(err_code([] {
          CellComplex bad("bad", {{"p"}, {"a"}},
                          {IntMat::from_rows({{0}, {0}})});
          ValidationResult r = validate(bad);
          if (!r.ok) fail(r.code, r.message);
        }) == "DimensionMismatch");

  // A hint outside the matrix is as malformed as a wrong shape.
  CHECK(err_code([] {
          CellComplex bad("bad", {{"p"}, {"a"}}, {IntMat(1, 1)},
                          {{{5, 0}}});
          ValidationResult r = validate(bad);
          if (!r.ok) fail(r.code, r.message);
        }) == "DimensionMismatch");

  CHECK(validate(theta()).ok);
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    CHECK(validate(builtin(name).complex).ok);
  }
}

TEST_CASE("closure follows supports and explicit zero incidences") {
  CellComplex k = s3c();
  // sigma1 is attached over edge a only; a is a loop at p recorded by a hint.
  auto cl = closure(k, CellRef{2, 0});
  REQUIRE(cl.size() == 3);
  CHECK(k.id_of(cl[0]) == "p");
  CHECK(k.id_of(cl[1]) == "a");
  CHECK(k.id_of(cl[2]) == "sigma1");

  // sigmaoo covers a and c, and b through a cancelling incidence, so its
  // closure is the whole complex except the other two faces.
  auto cloo = closure(k, CellRef{2, 2});
  REQUIRE(cloo.size() == 6);
  CHECK(k.id_of(cloo[0]) == "p");
  CHECK(k.id_of(cloo[1]) == "q");
  CHECK(k.id_of(cloo[4]) == "c");
  CHECK(k.id_of(cloo[5]) == "sigmaoo");

  // A vertex closure is the vertex alone.
  auto clp = closure(k, CellRef{0, 0});
  REQUIRE(clp.size() == 1);
  CHECK(k.id_of(clp[0]) == "p");
}

TEST_CASE("skeleton truncates and keeps hints") {
  CellComplex k = s3c();
  CellComplex s1 = skeleton(k, 1);
  CHECK(s1.dim() == 1);
  CHECK(s1.f(1) == 3);
  CHECK(validate(s1).ok);
  CHECK(s1.hints(1) == k.hints(1));
  CHECK(skeleton(k, 0).dim() == 0);
  CHECK(err_code([&] { skeleton(k, 3); }) == "OutOfRange");
}

TEST_CASE("delete refuses covered cells, hints included") {
  CellComplex k = s3c();
  // Edge b carries no nonzero coefficient in any 2-cell boundary, but
  // sigmaoo still runs over it; deletion must refuse.
  CHECK(err_code([&] { delete_cell(k, CellRef{1, 1}); }) == "NotDeletable");
  CHECK(err_code([&] { delete_cell(k, CellRef{0, 0}); }) == "NotDeletable");

  CellComplex del = delete_cell(k, CellRef{2, 2});
  CHECK(del.f(2) == 2);
  CHECK(del.index_of(2, "sigmaoo") == -1);
  CHECK(validate(del).ok);

  // Edge b is covered only through sigmaoo's zero-coefficient incidence, so
  // deleting sigmaoo frees b for deletion and drops the hint with it.
  CellComplex step = delete_cell(k, CellRef{2, 2});
  step = delete_cell(step, CellRef{1, 1});
  CHECK(step.f(1) == 2);
  CHECK(step.index_of(1, "b") == -1);
  CHECK(validate(step).ok);
}

TEST_CASE("contract_closure forms the quotient with a fresh basepoint") {
  CellComplex k = s3c();
  // Contracting the closed edge b identifies p and q; loops a and c survive
  // as loops at the new basepoint, kept incident through hints.
  CellComplex q = contract_closure(k, CellRef{1, 1});
  CHECK(q.f(0) == 1);
  CHECK(q.cells(0)[0] == "*");
  CHECK(q.f(1) == 2);
  CHECK(q.f(2) == 3);
  CHECK(validate(q).ok);
  CHECK(q.boundary(1).is_zero());
  CHECK(q.hints(1).size() == 2);

  // Contracting the closure of sigmaoo kills p, q, a, b, c; the two other
  // faces become 2-spheres wedged at the basepoint, with empty boundary.
  CellComplex w = contract_closure(k, CellRef{2, 2});
  CHECK(w.f(0) == 1);
  CHECK(w.f(1) == 0);
  CHECK(w.f(2) == 2);
  CHECK(validate(w).ok);
  CHECK(w.boundary(2).rows() == 0);
  CHECK(w.boundary(2).cols() == 2);
  CHECK(w.hints(2).empty());

  // The basepoint id never collides with a surviving cell id: here the
  // vertex named "*" is untouched by the contraction, so the new basepoint
  // picks up a second star.
  CellComplex named("named", {{"*", "x", "y"}, {"e"}},
                    {IntMat::from_rows({{0}, {-1}, {1}})});
  CellComplex nq = contract_closure(named, CellRef{1, 0});
  CHECK(nq.f(0) == 2);
  CHECK(nq.index_of(0, "*") >= 0);
  CHECK(nq.index_of(0, "**") >= 0);
}

TEST_CASE("collapse removes a free pair") {
  // The disc's edge is the free face of its single 2-cell.
  CellComplex disc = builtin("disc").complex;
  CellComplex c = collapse(disc, CellRef{2, 0}, CellRef{1, 0});
  CHECK(c.dim() == 2);
  CHECK(c.f(2) == 0);
  CHECK(c.f(1) == 0);
  CHECK(c.f(0) == 1);
  CHECK(validate(c).ok);

  CellComplex k = s3c();
  // Edge a sits under both sigma1 and sigmaoo, so (sigma1, a) is not free;
  // b is covered by sigmaoo only through a zero-coefficient incidence; and
  // the projective-plane attachment has coefficient 2.
  CHECK(err_code([&] { collapse(k, CellRef{2, 0}, CellRef{1, 0}); }) ==
        "NotFreeFace");
  CHECK(err_code([&] { collapse(k, CellRef{2, 2}, CellRef{1, 1}); }) ==
        "NotFreeFace");
  CellComplex rp2 = builtin("rp2").complex;
  CHECK(err_code([&] { collapse(rp2, CellRef{2, 0}, CellRef{1, 0}); }) ==
        "NotFreeFace");

  // After deleting sigmaoo, edge a has sigma1 as its unique coface with
  // coefficient 1, so the pair becomes collapsible.
  CellComplex del = delete_cell(k, CellRef{2, 2});
  CellComplex after = collapse(del, CellRef{2, 0}, CellRef{1, 0});
  CHECK(after.f(2) == 1);
  CHECK(after.f(1) == 2);
  CHECK(validate(after).ok);
}

TEST_CASE("subcomplex_from_cells requires downward closure") {
  CellComplex k = theta();
  std::vector<CellRef> cells{CellRef{0, 0}, CellRef{0, 1}, CellRef{1, 0},
                             CellRef{1, 1}};
  CellComplex sub = subcomplex_from_cells(k, cells, 1, "pair-of-edges");
  CHECK(sub.dim() == 1);
  CHECK(sub.f(1) == 2);
  CHECK(validate(sub).ok);

  std::vector<CellRef> open{CellRef{0, 0}, CellRef{1, 0}};
  CHECK(err_code([&] {
          subcomplex_from_cells(k, open, 1, "missing-endpoint");
        }) == "NotClosed");
}

TEST_CASE("spanning subcomplex restriction and realization") {
  CellComplex k = theta();
  SpanningSubcomplex s{&k, 2, 0b011};
  CHECK(s.count() == 2);
  CHECK(s.contains_cell(1));
  CHECK(!s.contains_cell(2));
  IntMat r = s.restricted_boundary();
  CHECK(r.rows() == 3);
  CHECK(r.cols() == 2);
  auto ids = s.cell_ids();
  REQUIRE(ids.size() == 2);
  CHECK(ids[0] == "fab");
  CHECK(ids[1] == "fbc");

  CellComplex real = realize(s, "two-faces");
  CHECK(real.dim() == 2);
  CHECK(real.f(2) == 2);
  CHECK(real.f(1) == 3);
  CHECK(validate(real).ok);
}

TEST_CASE("relabeling-insensitive key identifies isomorphic complexes") {
  // One plain edge and one doubled edge: the two columns have different
  // coefficient multisets, so the key's column sort normalizes their order.
  CellComplex a("a", {{"p", "q"}, {"e1", "e2"}},
                {IntMat::from_rows({{-1, 2}, {1, -2}})});
  CellComplex b("b", {{"u", "v"}, {"x", "y"}},
                {IntMat::from_rows({{2, -1}, {-2, 1}})});
  // Same structure up to renaming cells and swapping the two edges.
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(structural_key(a) != "");

  // structural_key ignores names but not order.
  CellComplex c("c", {{"p", "q"}, {"e2", "e1"}},
                {IntMat::from_rows({{2, -1}, {-2, 1}})});
  CHECK(structural_key(a) != structural_key(c));
  CHECK(canonical_key(a) == canonical_key(c));

  // A genuinely different complex gets a different key.
  CellComplex d("d", {{"p", "q"}, {"e1", "e2"}},
                {IntMat::from_rows({{-1, -1}, {1, 1}})});
  CHECK(canonical_key(a) != canonical_key(d));
}

TEST_CASE("operations preserve boundary-of-boundary on random complexes") {
  for (int i = 0; i < 60; ++i) {
    const std::uint64_t seed = tkr_test::random_seed + i;
    CellComplex k = random_two_complex(seed);
    CAPTURE(seed);
    REQUIRE(validate(k).ok);

    for (int j = 0; j <= k.dim(); ++j) CHECK(validate(skeleton(k, j)).ok);

    // Delete each deletable cell; contract each cell's closure.
    for (int d = 0; d <= k.dim(); ++d) {
      for (int idx = 0; idx < static_cast<int>(k.f(d)); ++idx) {
        CellRef c{d, idx};
        try {
          CellComplex del = delete_cell(k, c);
          CHECK(validate(del).ok);
        } catch (const error& e) {
          CHECK(e.code() == std::string("NotDeletable"));
        }
        CHECK(validate(contract_closure(k, c)).ok);
      }
    }
  }
}

TEST_CASE("text serialization round-trips") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    CellComplex k = builtin(name).complex;
    std::string text = serialize_complex(k);
    CellComplex back = parse_complex_text(text);
    CHECK(back.name() == k.name());
    CHECK(back.dim() == k.dim());
    for (int j = 0; j <= k.dim(); ++j) {
      CHECK(back.cells(j) == k.cells(j));
      CHECK(back.boundary(j) == k.boundary(j));
      CHECK(back.hints(j) == k.hints(j));
    }
    CHECK(structural_key(back) == structural_key(k));
  }

  for (int i = 0; i < 25; ++i) {
    CellComplex k = random_two_complex(tkr_test::random_seed + 1000 + i);
    CellComplex back = parse_complex_text(serialize_complex(k));
    CHECK(structural_key(back) == structural_key(k));
  }
}

TEST_CASE("parser reports malformed files with positions") {
  CHECK(err_code([] { parse_complex_text("nonsense\n"); }) == "ParseError");
  CHECK(err_code([] {
          parse_complex_text("complex x dim=1\ncells 0: p\ncells 1: a\n"
                             "boundary 1:\na = 2*zz\n");
        }) == "ParseError");
  CHECK(err_code([] {
          parse_complex_text("complex x dim=1\ncells 0: p p\ncells 1: a\n"
                             "boundary 1:\na = 0\n");
        }) == "DuplicateId");

  // Comments and explicit zero terms parse.
  CellComplex k = parse_complex_text(
      "# a loop with a hinted vertex\n"
      "complex loop dim=1\n"
      "cells 0: p\n"
      "cells 1: a\n"
      "boundary 1:\n"
      "a = 0*p\n");
  CHECK(k.f(1) == 1);
  CHECK(k.hints(1).count({0, 0}) == 1);

  CHECK(err_code([] { load_complex_file("/nonexistent/path.cw"); }) ==
        "UnknownName");
}

TEST_CASE("file loading matches in-memory parsing") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "tkr-chain-core-test";
  fs::create_directories(dir);
  const fs::path file = dir / "theta.cw";
  {
    std::ofstream out(file);
    out << serialize_complex(theta());
  }
  CellComplex k = load_complex_file(file.string());
  CHECK(structural_key(k) == structural_key(theta()));
  fs::remove_all(dir);
}
