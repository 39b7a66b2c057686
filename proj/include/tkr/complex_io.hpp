#pragma once

#include <string>

#include "tkr/cell_complex.hpp"

namespace tkr {

// Text form:
//   complex <name> dim=<k>
//   cells <j>: <id> <id> ...
//   boundary <j>:
//   <cell-id> = <coef>*<face-id> + <coef>*<face-id> + ...
// Faces omitted from a boundary line have coefficient zero; a 0*<face-id>
// term records an incidence whose coefficient cancels to zero. Bare face ids
// mean coefficient 1, and '#' starts a comment.
CellComplex parse_complex_text(const std::string& text);
std::string serialize_complex(const CellComplex& k);

CellComplex load_complex_file(const std::string& path);

}  // namespace tkr
