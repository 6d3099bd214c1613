#pragma once

#include <cstdint>
#include <unordered_map>

#include "imc/formula.hpp"
#include "imc/instance.hpp"
#include "imc/kripke.hpp"

namespace imc {

// Satisfaction sets for every subformula of one evaluated formula, keyed by
// arena node id (structural identity — shared subtrees have one entry).
// Immutable once returned by an evaluator.
class SatTable {
public:
    const Bits& row(std::uint32_t id) const;
    const Bits& row(IntF f) const { return row(f.id); }
    const Bits& row(ModalF f) const { return row(f.id); }
    bool contains(std::uint32_t id) const { return rows_.count(id) != 0; }
    void set(std::uint32_t id, Bits bits) { rows_[id] = std::move(bits); }
    const std::unordered_map<std::uint32_t, Bits>& rows() const { return rows_; }

private:
    std::unordered_map<std::uint32_t, Bits> rows_;
};

// Work accounting at (subformula, state, successor) granularity: implication
// and box scan one successor row per state (|U| units each); variable,
// constant and pointwise nodes cost |U| per subformula. The evaluators touch
// each triple at most once, so work <= tree_size(formula) * |U|^2.
struct EvalStats {
    std::uint64_t work = 0;
};

// Intuitionistic satisfaction. Requires the model to be admissible for BPL
// (transitive relation, monotone valuation) and throws AdmissibilityError
// otherwise; stricter classes are the caller's concern. The implication
// clause quantifies over R-successors exactly as given — on irreflexive
// frames the evaluation point itself is not consulted.
SatTable eval_int(const FormulaArena& arena, const KripkeModel& model, IntF f,
                  EvalStats* stats = nullptr);

// Modal satisfaction; no frame requirement (K). Implication is classical and
// pointwise; Box(a) holds at s iff every R-successor satisfies a.
SatTable eval_modal(const FormulaArena& arena, const KripkeModel& model, ModalF f,
                    EvalStats* stats = nullptr);

// Dispatches on the logic side, enforcing admissibility for the instance's
// class, and reads off membership of the instance state.
bool check(const McInstance& inst);
bool check_at(const McInstance& inst, std::string_view state);

// True iff membership propagates along every edge (upward-closed set).
bool upward_closed(const KripkeModel& model, const Bits& set);

// True iff every row of the table is upward closed under the model relation.
bool monotone_table(const KripkeModel& model, const SatTable& table);

} // namespace imc
