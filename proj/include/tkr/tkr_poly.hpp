#pragma once

#include "tkr/catalog.hpp"
#include "tkr/cell_complex.hpp"
#include "tkr/enumeration.hpp"
#include "tkr/poly.hpp"

namespace tkr {

// Level-j spanning-subcomplex polynomial: each subset S of the j-cells
// (taken together with the full (j-1)-skeleton) contributes
// X^{corank} Y^{nullity} of the restricted boundary map, which matches the
// degree-(j-1)/-j Betti exponents of the subcomplex.
BiPoly tkr_polynomial(const CellComplex& k, int j, const EnumOptions& opts = {});

// Same sum with each subset weighted by the squared order of the torsion of
// its degree-(j-1) homology.
BiPoly modified_tkr(const CellComplex& k, int j, const EnumOptions& opts = {});

// Alternating-sign top-dimension sum in one variable.
UniPoly bott_direct(const CellComplex& k, const EnumOptions& opts = {});

// Bott polynomial through the substitution identity
// R(L) = (-1)^{beta_k} T(-1, -L).
UniPoly bott_via_tkr(const CellComplex& k, const EnumOptions& opts = {});

// Closed forms for the top-dimension polynomial of a connected compact
// manifold with f_k top cells.
BiPoly manifold_closed_form(int f_k, ManifoldKind kind);

}  // namespace tkr
