#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tkr/bigint.hpp"

namespace tkr {

// Bivariate polynomial over Z with nonnegative exponents, sparse by term.
// Canonical text orders terms graded-lexicographically, X before Y,
// highest first: "X^2 + 3*X + Y + 3".
class BiPoly {
public:
  BiPoly() = default;

  static BiPoly constant(Int c);
  static BiPoly monomial(int ex, int ey, Int c = 1);
  static BiPoly var_x() { return monomial(1, 0); }
  static BiPoly var_y() { return monomial(0, 1); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }
  Int coefficient(int ex, int ey) const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly scaled(const Int& c) const;
  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

  // p(X + dx, Y + dy)
  BiPoly shifted(long long dx, long long dy) const;
  // X and Y exchanged
  BiPoly swapped() const;
  Int evaluate(const Int& x, const Int& y) const;

  // Exact division by X; every term must have positive X-exponent.
  BiPoly divided_by_x() const;

  bool all_coefficients_positive() const;

  std::string to_text() const;
  std::string to_json() const;
  static BiPoly parse_text(const std::string& s);
  static BiPoly parse_json(const std::string& s);

  void add_term(int ex, int ey, const Int& c);

private:
  std::map<std::pair<int, int>, Int> terms_;  // (x_exp, y_exp) -> nonzero coef
};

// Univariate polynomial over Z in the variable L.
class UniPoly {
public:
  UniPoly() = default;

  static UniPoly constant(Int c);
  static UniPoly monomial(int e, Int c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Int>& terms() const { return terms_; }
  Int coefficient(int e) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  bool operator==(const UniPoly& o) const { return terms_ == o.terms_; }

  Int evaluate(const Int& v) const;

  std::string to_text() const;
  std::string to_json() const;
  static UniPoly parse_text(const std::string& s);
  static UniPoly parse_json(const std::string& s);

  void add_term(int e, const Int& c);

private:
  std::map<int, Int> terms_;
};

// Substitutes X = -1, Y = -L and multiplies by (-1)^sign_exponent.
UniPoly to_bott_substitution(const BiPoly& p, int sign_exponent);

// (1 + X)^n
BiPoly one_plus_x_power(int n);

}  // namespace tkr
