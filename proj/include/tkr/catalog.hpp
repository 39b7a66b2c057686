#pragma once

#include <string>
#include <vector>

#include "tkr/cell_complex.hpp"

namespace tkr {

enum class ManifoldKind { none, closed_orientable, other };

struct BuiltinInfo {
  CellComplex complex;
  ManifoldKind manifold = ManifoldKind::none;
};

// Fixed-name builtins, in listing order.
const std::vector<std::string>& builtin_names();

// True for fixed names and well-formed simplex-skeleton(n,k) instances.
bool is_builtin_name(const std::string& name);

// Resolves a builtin by name; UnknownName otherwise.
BuiltinInfo builtin(const std::string& name);

// k-skeleton of the simplex on n vertices (0 <= k < n <= 9).
CellComplex simplex_skeleton(int n, int k);

}  // namespace tkr
