#pragma once

#include <string>

#include "selt/eyd.hpp"
#include "selt/slide_calc.hpp"
#include "selt/tableau.hpp"

// Plain-text pictures in shifted English notation. Inner boxes print as '.',
// empty skew boxes as '_'; edge labels are listed under the grid.

namespace selt {

std::string render_ascii(const EdgeTableau& t);
/// '+' on occupied boxes, '.' elsewhere.
std::string render_ascii(const ExcitedDiagram& d);
/// S_{rho_{n,m}} with shaded boxes marked by '*'.
std::string render_ascii(const Shading& s);

}  // namespace selt
