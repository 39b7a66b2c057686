#pragma once

#include <cstdint>

#include "tkr/cell_complex.hpp"

namespace tkr {

// Seed-determined random 2-complex: a small multigraph (loops allowed) with
// 2-cells attached along integer combinations of fundamental cycles, so the
// boundary condition holds by construction and subcomplexes routinely carry
// torsion. Identical seeds give identical complexes on every platform.
CellComplex random_two_complex(std::uint64_t seed);

}  // namespace tkr
