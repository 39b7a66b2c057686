#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "tkr/catalog.hpp"
#include "tkr/errors.hpp"
#include "tkr/homology.hpp"
#include "tkr/random_complex.hpp"
#include "tkr/tkr_poly.hpp"
#include "tkr/trees.hpp"

using namespace tkr;

TEST_CASE("acyclicity in positive codimension") {
  CHECK(is_apc(builtin("sphere-three-cells").complex));
  CHECK(is_apc(builtin("rp2").complex));
  CHECK(is_apc(builtin("s2vs2").complex));
  CHECK(is_apc(builtin("disc").complex));
  CHECK(is_apc(builtin("tetrahedron-boundary").complex));
  CHECK(is_apc(builtin("simplex-skeleton(5,2)").complex));
  CHECK(!is_apc(builtin("torus").complex));
  CHECK(!is_apc(builtin("klein-bottle").complex));
  CHECK(!is_apc(builtin("s2vs1").complex));
  CHECK(!is_apc(builtin("sphere-three-cells-deleted").complex));
}

TEST_CASE("required size comes from the skeleton") {
  const CellComplex k = builtin("sphere-three-cells").complex;
  CHECK(cst_required_size(k, 0) == 1);
  CHECK(cst_required_size(k, 1) == 1);
  CHECK(cst_required_size(k, 2) == 2);
  const CellComplex tetra = builtin("tetrahedron-boundary").complex;
  CHECK(cst_required_size(tetra, 1) == 3);
  CHECK(cst_required_size(tetra, 2) == 3);
  CHECK_THROWS_AS(cst_required_size(k, 3), error);
}

TEST_CASE("tree counts on the catalog") {
  auto count = [](const char* name, int j) {
    return tau(builtin(name).complex, j);
  };
  CHECK(count("sphere-three-cells", 1) == 1);
  CHECK(count("sphere-three-cells", 2) == 3);
  CHECK(count("theta-complex", 1) == 3);
  CHECK(count("theta-complex", 2) == 3);
  CHECK(count("triangle-complex", 1) == 3);
  CHECK(count("rp2", 2) == 1);
  CHECK(count("disc", 2) == 1);
  CHECK(count("s2vs2", 2) == 1);
  CHECK(count("tetrahedron-boundary", 1) == 16);
  CHECK(count("tetrahedron-boundary", 2) == 4);

  // Level 0: one tree per vertex.
  CHECK(count("tetrahedron-boundary", 0) == 4);
  CHECK(count("cube-surface", 0) == 8);

  // Complete-graph skeleта: Cayley's count.
  CHECK(count("simplex-skeleton(5,1)", 1) == 125);
  CHECK(count("simplex-skeleton(6,1)", 1) == 1296);
}

TEST_CASE("weighted counts see torsion") {
  CHECK(weighted_tau(builtin("rp2").complex, 2) == 4);
  CHECK(weighted_tau(builtin("s2vs2").complex, 2) == 1);
  CHECK(weighted_tau(builtin("sphere-three-cells").complex, 2) == 3);
  CHECK(weighted_tau(builtin("tetrahedron-boundary").complex, 2) == 4);

  // Two-dimensional tree count of the 5-vertex simplex skeleton.
  const CellComplex s52 = builtin("simplex-skeleton(5,2)").complex;
  CHECK(tau(s52, 2) == 125);
  CHECK(weighted_tau(s52, 2) == 125);
}

TEST_CASE("verdicts explain membership and obey two-out-of-three") {
  for (const auto& name : builtin_names()) {
    const CellComplex k = builtin(name).complex;
    CAPTURE(name);
    for (int j = 0; j <= k.dim(); ++j) {
      if (k.f(j) > 12) continue;
      EnumOptions opts;
      auto trees = enumerate_csts(k, j, opts);
      std::vector<std::uint64_t> masks;
      for (const auto& t : trees) masks.push_back(t.mask);
      CHECK(std::is_sorted(masks.begin(), masks.end()));

      const std::uint64_t total = std::uint64_t(1) << k.f(j);
      std::uint64_t found = 0;
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        SpanningSubcomplex s{&k, j, mask};
        CstVerdict v = cst_verdict(s);
        const int hold = int(v.top_acyclic) + int(v.codim_connected) +
                         int(v.count_matches);
        // Any two of the three conditions force the third.
        CHECK(hold != 2);
        CHECK(v.is_cst == (hold == 3));
        if (v.is_cst) {
          CHECK(std::find(masks.begin(), masks.end(), mask) != masks.end());
          ++found;
        }
      }
      CHECK(found == masks.size());
    }
  }
}

TEST_CASE("determinant route equals brute-force weighted count") {
  struct Case {
    const char* name;
    int j;
  };
  for (const Case c : {Case{"sphere-three-cells", 2}, Case{"rp2", 2},
                       Case{"s2vs2", 2}, Case{"disc", 2},
                       Case{"tetrahedron-boundary", 1},
                       Case{"tetrahedron-boundary", 2},
                       Case{"theta-complex", 1}, Case{"theta-complex", 2},
                       Case{"triangle-complex", 1},
                       Case{"octahedron-surface", 2},
                       Case{"simplex-skeleton(5,2)", 2}}) {
    const CellComplex k = builtin(c.name).complex;
    CAPTURE(c.name);
    CAPTURE(c.j);
    const Int expected = weighted_tau(k, c.j);
    // The choice of reference tree must not matter.
    auto gammas = enumerate_csts(k, c.j - 1);
    REQUIRE(!gammas.empty());
    std::size_t probes = 0;
    for (const auto& gamma : gammas) {
      MatrixTreeResult mt = matrix_tree_weighted(k, c.j, gamma);
      CHECK(mt.value == expected);
      if (++probes == 8) break;
    }
  }
}

TEST_CASE("determinant route rejects bad inputs") {
  const CellComplex torus = builtin("torus").complex;
  SpanningSubcomplex point{&torus, 0, 1};
  CHECK_THROWS_AS(matrix_tree_weighted(torus, 1, point), error);  // not APC

  const CellComplex k = builtin("sphere-three-cells").complex;
  auto gammas = enumerate_csts(k, 1);
  REQUIRE(gammas.size() == 1);
  try {
    SpanningSubcomplex not_tree{&k, 1, 0b111};
    matrix_tree_weighted(k, 2, not_tree);
    FAIL("expected NotACst");
  } catch (const error& e) {
    CHECK(e.code() == std::string("NotACst"));
  }
  try {
    SpanningSubcomplex wrong_level{&k, 0, 1};
    matrix_tree_weighted(k, 2, wrong_level);
    FAIL("expected NotACst");
  } catch (const error& e) {
    CHECK(e.code() == std::string("NotACst"));
  }
}

TEST_CASE("free terms of the subset polynomials count trees") {
  for (const auto& name : builtin_names()) {
    const BuiltinInfo info = builtin(name);
    if (!is_apc(info.complex)) continue;
    CAPTURE(name);
    for (int j = 1; j <= info.complex.dim(); ++j) {
      if (info.complex.f(j) > 12) continue;
      CHECK(tkr_polynomial(info.complex, j).evaluate(0, 0) ==
            tau(info.complex, j));
      CHECK(modified_tkr(info.complex, j).evaluate(0, 0) ==
            weighted_tau(info.complex, j));
    }
  }
}

TEST_CASE("random complexes keep the enumeration and verdict routes equal") {
  for (int i = 0; i < 25; ++i) {
    const CellComplex k = random_two_complex(tkr_test::random_seed + 700 + i);
    CAPTURE(k.name());
    if (k.f(2) > 10) continue;
    auto trees = enumerate_csts(k, 2);
    std::uint64_t brute = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k.f(2)); ++mask) {
      SpanningSubcomplex s{&k, 2, mask};
      if (cst_verdict(s).is_cst) ++brute;
    }
    CHECK(brute == trees.size());
  }
}
