#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imc/agap.hpp"
#include "imc/instance.hpp"

namespace imc {

// Each reduction returns the emitted instance together with the named formula
// families of its construction, so tests can exercise the per-slice claims
// directly. Vectors are 1-based in spirit: psi[i-1] holds the formula with
// subscript i.

// Logic K, zero variables, strictly implicational, polarity complement.
// Model: slice nodes, original edges plus a self-loop on the target.
struct K0Reduction {
    McInstance instance;
    std::size_t m = 0;
};
K0Reduction to_k0(const AsAgapInstance& inst);

// Logic KC, implicational, m+1 variables a1..a{m+1}, polarity same.
// Model: reflexive closure of (pseudo-transitive closure + slice {top} +
// edges from every original node to top).
struct KcImplReduction {
    McInstance instance;
    std::vector<IntF> psi;          // psi[0] = psi_1 ... psi[m-1] = psi_m
    std::vector<std::string> vars;  // a1..a{m+1}
};
KcImplReduction to_kc_impl(const AsAgapInstance& inst);

// Logic FPL, implicational, one variable p, polarity complement.
// Model: pseudo-transitive closure, valuation p = {target}.
struct Fpl1Reduction {
    McInstance instance;
    std::vector<IntF> alpha; // alpha[0] = alpha_1 ... alpha[m-1] = alpha_m (= bot)
    std::vector<IntF> psi;   // psi[0] = psi_1 ... psi[m-1] = psi_m (= p)
};
Fpl1Reduction to_fpl1_impl(const AsAgapInstance& inst);

// Logic BPL, variable-free, connectives -> and | only, polarity complement.
// Adds three fixed auxiliary frames (15 auxiliary states) and substitutes
// beta1, beta2 for the placeholders of the two-variable family.
struct Bpl0Reduction {
    McInstance instance;
    std::vector<IntF> alpha; // alpha[0] = alpha_1 ... alpha[3] = alpha_4
    IntF beta1, beta2;
    std::vector<std::string> aux_states; // the 15 auxiliary names
};
Bpl0Reduction to_bpl0(const AsAgapInstance& inst);

// Logic S42, one variable a, polarity same.
// Model: reflexive + pseudo-transitive closure plus slices {u,t1,t2} and
// {top}; a marks even slices, t2 and top.
struct S42Reduction {
    McInstance instance;
    ModalF eta;
    std::vector<ModalF> delta;  // delta[0] = delta_1 ... delta[m-1] = delta_m
    std::vector<ModalF> lambda; // lambda[0] = lambda_1 ... lambda[m-1] = lambda_m
};
S42Reduction to_s42_one_var(const AsAgapInstance& inst);

// Level sizes of the generic models: n_1 = 3, n_{k+1} = (n_k - 1)^2.
std::size_t generic_level_size(std::size_t k);

// The generic directed preorder M^S_t: levels W_0 = {c,d1..d3,e1..e4} and
// W_k = {a_i^k, b_i^k}; base edges per the fixed table, level relations, the
// level-jumping edges, then transitive and reflexive closure. Valuation
// p = {c,d1}, q = {c,d2}.
struct GenericModel {
    KripkeModel model;
    std::vector<std::vector<std::string>> levels; // levels[k] = names of W_k
    std::size_t t = 0;
};
GenericModel build_generic_model(std::size_t t);

// Replacement formulas over the two variables p,q: base delta1..delta3,
// eps1..eps4, level-1 alpha/beta triples, and the inductive level step up to
// level t.
struct ReplacementFormulas {
    std::vector<IntF> delta;               // delta[0..2]
    std::vector<IntF> eps;                 // eps[0..3]
    std::vector<std::vector<IntF>> alpha;  // alpha[k][i-1] = alpha_i^k, k = 1..t
    std::vector<std::vector<IntF>> beta;
};
ReplacementFormulas build_replacement_formulas(FormulaArena& arena, std::size_t t);

// Appendix-style two-variable simulation: consumes an implicational IPC
// instance with m variables, picks the smallest k > 1 with n_k > m, replaces
// each variable v_i (lexicographic order) by alpha_i^k | beta_i^k, and glues
// the input model to M^S_k. Logic KC, two variables, polarity same.
struct Kc2Reduction {
    McInstance instance;
    std::size_t k = 0;
    ReplacementFormulas formulas;        // up to level k
    GenericModel generic;                // standalone M^S_k (pre-merge)
    std::vector<std::string> var_order;  // v_1..v_m
};
Kc2Reduction ipc_to_kc2(const McInstance& input);

// Applies gt' and maps the logic to its modal companion; model, state and
// polarity unchanged. InputError on modal input.
McInstance chain_to_modal(const McInstance& input);

} // namespace imc
