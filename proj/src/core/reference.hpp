#pragma once

#include "core/chains.hpp"

namespace jps {

// Independent "definition route" implementations, kept separate from the
// compact vector-form operators so the two can be checked against each other.

// {f,g} = lambda * det(grad f, grad g, grad P1, grad P2) by cofactor
// expansion of the 4x4 matrix; no use of the cross/f tables.
Poly bracket_via_determinant(const PoissonStructure& s, const Poly& f, const Poly& g);

// Poisson boundary evaluated term by term from the defining formula
//   d_k(F0 dF1^...^dFk) = sum_i (-1)^{i+1} {F0,F_i} dF1^...^hat{dF_i}^...^dFk
//     + sum_{i<j} (-1)^{i+j} F0 d{F_i,F_j}^dF1^...hat_i...hat_j...^dFk
// applied to the fixed basis forms and re-expressed in the fixed bases.
ChainElement poisson_boundary_reference(const PoissonStructure& s, const ChainElement& c);

} // namespace jps
