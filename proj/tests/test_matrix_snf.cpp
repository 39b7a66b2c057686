#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "tkr/errors.hpp"
#include "tkr/matrix.hpp"
#include "tkr/snf.hpp"

using tkr::Int;
using tkr::IntMat;

namespace {

IntMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                     int span) {
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = static_cast<long long>(rng() % (2 * span + 1)) - span;
  return m;
}

}  // namespace

TEST_CASE("matrix shapes and selection") {
  IntMat m = IntMat::from_rows({{1, 2, 3}, {4, 5, 6}});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.at(1, 2) == 6);

  IntMat t = m.transpose();
  CHECK(t.rows() == 3);
  CHECK(t.at(2, 1) == 6);

  IntMat picked = m.select_columns_mask(0b101);
  CHECK(picked.cols() == 2);
  CHECK(picked.at(0, 1) == 3);

  IntMat empty_cols(2, 0);
  CHECK(empty_cols.is_zero());
  CHECK(m.drop_column(1).cols() == 2);
  CHECK(m.drop_row(0).rows() == 1);

  CHECK(m.column_is_zero(0) == false);
  IntMat z(3, 2);
  CHECK(z.column_is_zero(1));
  CHECK(z.row_is_zero(2));
}

TEST_CASE("matrix product checks dimensions") {
  IntMat a = IntMat::from_rows({{1, 0}, {0, 1}});
  IntMat b = IntMat::from_rows({{3}, {4}});
  IntMat p = a * b;
  CHECK(p.at(0, 0) == 3);
  CHECK(p.at(1, 0) == 4);
  CHECK_THROWS_AS(static_cast<void>(b * a), tkr::error);
}

TEST_CASE("rank of fixed matrices") {
  CHECK(tkr::rank_of(IntMat(0, 5)) == 0);
  CHECK(tkr::rank_of(IntMat(5, 0)) == 0);
  CHECK(tkr::rank_of(IntMat(3, 3)) == 0);
  CHECK(tkr::rank_of(IntMat::from_rows({{2}})) == 1);
  CHECK(tkr::rank_of(IntMat::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(tkr::rank_of(IntMat::from_rows({{1, 2}, {3, 4}})) == 2);
  // Entries that overflow intermediate products unless division is exact.
  IntMat big = IntMat::from_rows({{1000000007, 2},
                                  {3, 1000000009},
                                  {1000000021, 1000000033}});
  CHECK(tkr::rank_of(big) == 2);
}

TEST_CASE("determinant of fixed matrices") {
  CHECK(tkr::determinant(IntMat(0, 0)) == 1);
  CHECK(tkr::determinant(IntMat::from_rows({{-7}})) == -7);
  CHECK(tkr::determinant(IntMat::from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(tkr::determinant(IntMat::from_rows({{1, 2}, {2, 4}})) == 0);
  // Row swaps inside the elimination must keep the sign straight.
  CHECK(tkr::determinant(IntMat::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(tkr::determinant(IntMat::from_rows(
            {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == -1);
}

TEST_CASE("smith form of fixed matrices") {
  auto s = tkr::smith_normal_form(IntMat::from_rows({{2}}));
  CHECK(s.rank == 1);
  REQUIRE(s.invariant_factors.size() == 1);
  CHECK(s.invariant_factors[0] == 2);

  s = tkr::smith_normal_form(IntMat::from_rows({{2, 0}, {0, 3}}));
  REQUIRE(s.invariant_factors.size() == 2);
  CHECK(s.invariant_factors[0] == 1);
  CHECK(s.invariant_factors[1] == 6);

  s = tkr::smith_normal_form(IntMat::from_rows({{2, 0}, {0, 2}}));
  REQUIRE(s.invariant_factors.size() == 2);
  CHECK(s.invariant_factors[0] == 2);
  CHECK(s.invariant_factors[1] == 2);

  s = tkr::smith_normal_form(IntMat(3, 0));
  CHECK(s.rank == 0);
  CHECK(s.invariant_factors.empty());

  s = tkr::smith_normal_form(IntMat::from_rows({{0, 0}, {0, 0}}));
  CHECK(s.rank == 0);

  // A dense example whose diagonal needs the divisibility fix-up.
  s = tkr::smith_normal_form(IntMat::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
  REQUIRE(s.invariant_factors.size() == 3);
  CHECK(s.invariant_factors[0] == 2);
  CHECK(s.invariant_factors[1] == 2);
  CHECK(s.invariant_factors[2] == 156);
}

TEST_CASE("smith form matches the minor-gcd definition on random matrices") {
  std::mt19937_64 rng(tkr_test::random_seed);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4;
    const std::size_t c = 1 + rng() % 4;
    IntMat m = random_matrix(rng, r, c, 6);
    auto s = tkr::smith_normal_form(m);

    CHECK(s.rank == tkr_test::minor_rank(m));
    auto oracle = tkr_test::minors_invariant_factors(m);
    REQUIRE(s.invariant_factors.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i)
      CHECK(s.invariant_factors[i] == oracle[i]);
    for (std::size_t i = 1; i < s.invariant_factors.size(); ++i) {
      CHECK(s.invariant_factors[i] % s.invariant_factors[i - 1] == 0);
    }
    for (const Int& f : s.invariant_factors) CHECK(f > 0);
  }
}

TEST_CASE("fraction-free rank matches the minor definition on random matrices") {
  std::mt19937_64 rng(tkr_test::random_seed + 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 5;
    const std::size_t c = 1 + rng() % 5;
    IntMat m = random_matrix(rng, r, c, 5);
    CHECK(tkr::rank_of(m) == tkr_test::minor_rank(m));
  }
}

TEST_CASE("fraction-free determinant matches cofactor expansion on random matrices") {
  std::mt19937_64 rng(tkr_test::random_seed + 2);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    IntMat m = random_matrix(rng, n, n, 7);
    CHECK(tkr::determinant(m) == tkr_test::laplace_determinant(m));
  }
}
