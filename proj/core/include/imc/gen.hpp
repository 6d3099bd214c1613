#pragma once

#include <cstdint>
#include <vector>

#include "imc/agap.hpp"
#include "imc/formula.hpp"
#include "imc/instance.hpp"
#include "imc/kripke.hpp"
#include "imc/rng.hpp"

namespace imc {

// Seeded generators shared by the differential tester and the acceptance
// suite. All draws go through Rng, so outputs are reproducible bit-for-bit.

// Valid slice-graph instance: even m in [2, max_slices], slice sizes uniform
// in [1, max_per_slice], every non-last-slice node gets 1-3 successors in the
// next slice, source uniform in V1, target uniform in Vm. Node names v0,v1,..
AsAgapInstance random_asagap(Rng& rng, std::size_t max_slices, std::size_t max_per_slice);

// General alternating instance with n nodes: kinds uniform; edges between
// opposite-kind nodes, each present with probability 1/2; source and target
// uniform.
AgapInstance random_agap(Rng& rng, std::size_t max_nodes);

// Random admissible model of an intuitionistic class (BPL, IPC, or FPL):
// random DAG edges on up to max_states states, transitive closure, reflexive
// closure when the class needs it, and a valuation made monotone by
// upward-closing random seed sets.
KripkeModel random_int_model(Rng& rng, LogicClass logic, std::size_t max_states,
                             const std::vector<std::string>& vars);

// Random transitive irreflexive model (FPL/PrL frame) with an arbitrary
// (non-monotone) valuation.
KripkeModel random_strict_order_model(Rng& rng, std::size_t max_states,
                                      const std::vector<std::string>& vars);

// Random intuitionistic formula of tree size <= max_size over the given
// variables (empty vector: variable-free).
IntF random_int_formula(FormulaArena& arena, Rng& rng, std::size_t max_size,
                        const std::vector<std::string>& vars);

// Bot-free implicational formulas (variables and '->' only); InputError when
// the variable pool is empty.
IntF random_implicational_formula(FormulaArena& arena, Rng& rng, std::size_t max_size,
                                  const std::vector<std::string>& vars);

// Random variable-free modal formula (bot, ->, []).
ModalF random_modal_formula(FormulaArena& arena, Rng& rng, std::size_t max_size);

} // namespace imc
