#pragma once

#include <string>
#include <string_view>

#include "imc/agap.hpp"
#include "imc/instance.hpp"
#include "imc/kripke.hpp"

namespace imc {

// All formats are line-oriented UTF-8; `#` starts a comment; blank lines are
// ignored. Writers emit canonical files that re-parse to equal values.

// Kripke model:
//   states: s0 s1 top
//   edge: s0 s1
//   val p: s1 top
// Every `edge:` line lists exactly one ordered pair; `val` lines may repeat
// per variable (union semantics). State names here may contain the reserved
// characters '@'/'^' so that reduction outputs round-trip.
KripkeModel parse_model(std::string_view text);
std::string write_model(const KripkeModel& model);

// Slice-graph instance:
//   slice 1: s
//   slice 2: x t
//   edge: s x
//   source: s
//   target: t
// Node names must be plain identifiers (no '@'/'^' — those are reserved for
// synthesized names).
AsAgapInstance parse_asagap(std::string_view text);
std::string write_asagap(const AsAgapInstance& inst);

// General alternating-graph instance:
//   exists: s
//   forall: x t
//   edge: s x
//   source: s
//   target: t
AgapInstance parse_agap(std::string_view text);
std::string write_agap(const AgapInstance& inst);

// Instance bundle: header lines `logic:`, `state:`, `polarity:`, `formula:`
// followed by model lines in the Kripke format. Headers may appear in any
// order; the formula is parsed on the side the logic class selects.
McInstance parse_bundle(std::string_view text);
std::string write_bundle(const McInstance& inst);

} // namespace imc
