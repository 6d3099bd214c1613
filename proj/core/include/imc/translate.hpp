#pragma once

#include "imc/formula.hpp"

namespace imc {

// Goedel-Tarski translation:
//   gt(bot) = bot, gt(p) = p and []p, homomorphic over and/or,
//   gt(a -> b) = [](gt(a) -> gt(b)).
ModalF gt(FormulaArena& arena, IntF f);

// Variant with gt'(p) = p, otherwise identical. Satisfaction-preserving on
// every admissible intuitionistic model: M,s satisfies f intuitionistically
// iff M,s satisfies gt_prime(f) modally. Maps the implicational fragment into
// the strictly implicational fragment.
ModalF gt_prime(FormulaArena& arena, IntF f);

} // namespace imc
