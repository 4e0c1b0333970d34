#pragma once

// Recurrence routes to the Dumont-Foata polynomials G_n(x, y, z), their
// cofactors F_n with G_n = xyz F_n, and the Gandhi polynomials G_n(1, 1, z).

#include "polyb/multipoly.hpp"

namespace polyb {

/// F_n from F_n = (x+z)(y+z) F_{n-2}(x, y, z+1) - z^2 F_{n-2}(x, y, z),
/// F_1 = 0, F_2 = 1. Odd n gives 0. Requires n >= 1.
MultiPoly f_polynomial(unsigned n);

/// G_0 = 1, G_n = 0 for odd n, G_n = xyz F_n otherwise.
MultiPoly dumont_foata_poly(unsigned n);

/// G_{n+2}(z) = z(z+1) G_n(z+1) - z^2 G_n(z), G_0 = 1, G_1 = 0.
UniPoly gandhi_poly(unsigned n);

}  // namespace polyb
