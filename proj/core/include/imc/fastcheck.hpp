#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "imc/formula.hpp"
#include "imc/kripke.hpp"

namespace imc {

// A natural number or the distinguished top element omega (greater than every
// natural). Identifies the Visser chain formula a variable-free formula is
// FPL-equivalent to.
class FormulaIndex {
public:
    static FormulaIndex nat(std::uint64_t v) { return FormulaIndex(v, false); }
    static FormulaIndex omega() { return FormulaIndex(0, true); }

    bool is_omega() const { return omega_; }
    std::uint64_t value() const; // std::logic_error when omega

    friend bool operator==(const FormulaIndex& a, const FormulaIndex& b) {
        return a.omega_ == b.omega_ && (a.omega_ || a.v_ == b.v_);
    }
    friend bool operator<(const FormulaIndex& a, const FormulaIndex& b) {
        if (a.omega_) return false;
        if (b.omega_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const FormulaIndex& a, const FormulaIndex& b) {
        return a == b || a < b;
    }

    std::string to_string() const;

private:
    FormulaIndex(std::uint64_t v, bool omega) : v_(v), omega_(omega) {}
    std::uint64_t v_;
    bool omega_;
};

// Visser chain: alpha_0 = bot, alpha_{i+1} = top -> alpha_i; alpha_omega is
// the tree of top (bot -> bot).
IntF visser_alpha(FormulaArena& arena, std::uint64_t i);
IntF visser_alpha(FormulaArena& arena, const FormulaIndex& i);

// Equivalence-class index of a variable-free formula:
//   bot -> 0; and -> min; or -> max; a -> b maps to omega if idx(a) <= idx(b),
//   else idx(b)+1. InputError when variables are present.
FormulaIndex formula_index(const FormulaArena& arena, IntF f);

// Length of the longest path starting at w: 0 for a sink, else 1 + max over
// successors. Memoized depth-first recursion with explicit cycle detection;
// CycleError when a cycle is reachable from w.
std::uint64_t lp(const KripkeModel& model, std::size_t w);

// The linear model L_n = ({0..n}, >) with state names l0..ln; lp(k) = k.
KripkeModel linear_model(std::uint64_t n);

// Deterministic collapse of the index/longest-path algorithm: returns
// lp(w) < formula_index(f), with omega above every natural. Requires FPL
// admissibility (AdmissibilityError) and a variable-free formula (InputError).
bool check_fpl0(const FormulaArena& arena, const KripkeModel& model, IntF f,
                std::string_view state);

// Linear-model collapse for variable-free provability-logic checking:
// evaluates f at state n of L_n where n = lp(w). Requires PrL admissibility
// and a variable-free formula.
bool check_prl0(const FormulaArena& arena, const KripkeModel& model, ModalF f,
                std::string_view state);

// Formula pair (alpha_{n+1}, alpha_n): the longest path from v in the acyclic
// digraph has length exactly n iff, over the transitive closure viewed as an
// FPL model, v satisfies the first and refutes the second. CycleError on
// cyclic input, InputError on a bad start node.
std::pair<IntF, IntF> longest_path_instance(FormulaArena& arena,
                                            const std::vector<std::vector<std::size_t>>& adj,
                                            std::size_t v, std::uint64_t n);

} // namespace imc
