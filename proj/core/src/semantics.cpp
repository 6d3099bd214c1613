#include "imc/semantics.hpp"

#include <vector>

namespace imc {

const Bits& SatTable::row(std::uint32_t id) const {
    auto it = rows_.find(id);
    if (it == rows_.end()) throw InputError("no satisfaction row for this node");
    return it->second;
}

// --------------------------------------------------------------------------
// Evaluation
// --------------------------------------------------------------------------

namespace {

// Worklist of nodes in postorder (children before parents), visiting each
// distinct subformula once. Works for both formula sides via accessors.
template <typename F, typename Children>
std::vector<F> postorder(F root, Children&& children) {
    std::vector<F> order;
    std::vector<std::pair<F, bool>> stack{{root, false}};
    std::vector<bool> seen;
    auto mark = [&](F f) {
        if (f.id >= seen.size()) seen.resize(f.id + 1, false);
        if (seen[f.id]) return true;
        seen[f.id] = true;
        return false;
    };
    while (!stack.empty()) {
        auto [f, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            order.push_back(f);
            continue;
        }
        if (mark(f)) continue;
        stack.push_back({f, true});
        for (F c : children(f)) stack.push_back({c, false});
    }
    return order;
}

void add_work(EvalStats* stats, std::uint64_t amount) {
    if (stats) stats->work += amount;
}

} // namespace

SatTable eval_int(const FormulaArena& arena, const KripkeModel& model, IntF root,
                  EvalStats* stats) {
    require_admissible(model, LogicClass::BPL);
    const std::size_t n = model.size();
    const Relation& rel = model.relation();

    auto children = [&](IntF f) -> std::vector<IntF> {
        switch (arena.op(f)) {
            case IntOp::Bot:
            case IntOp::Var:
                return {};
            default:
                return {arena.left(f), arena.right(f)};
        }
    };

    SatTable table;
    for (IntF f : postorder(root, children)) {
        Bits row(n);
        switch (arena.op(f)) {
            case IntOp::Bot:
                add_work(stats, n);
                break;
            case IntOp::Var:
                row = model.val_row(arena.name(f));
                add_work(stats, n);
                break;
            case IntOp::And:
                row = table.row(arena.left(f).id) & table.row(arena.right(f).id);
                add_work(stats, n);
                break;
            case IntOp::Or:
                row = table.row(arena.left(f).id) | table.row(arena.right(f).id);
                add_work(stats, n);
                break;
            case IntOp::Impl: {
                // s satisfies a->b iff no successor of s satisfies a but not b.
                Bits bad = table.row(arena.left(f).id) - table.row(arena.right(f).id);
                for (std::size_t s = 0; s < n; ++s) {
                    if (!rel[s].intersects(bad)) row.set(s);
                    add_work(stats, n);
                }
                break;
            }
        }
        table.set(f.id, std::move(row));
    }
    return table;
}

SatTable eval_modal(const FormulaArena& arena, const KripkeModel& model, ModalF root,
                    EvalStats* stats) {
    const std::size_t n = model.size();
    const Relation& rel = model.relation();

    auto children = [&](ModalF f) -> std::vector<ModalF> {
        switch (arena.op(f)) {
            case ModalOp::Bot:
            case ModalOp::Var:
                return {};
            case ModalOp::Box:
                return {arena.child(f)};
            case ModalOp::Impl:
                return {arena.left(f), arena.right(f)};
        }
        return {};
    };

    SatTable table;
    for (ModalF f : postorder(root, children)) {
        Bits row(n);
        switch (arena.op(f)) {
            case ModalOp::Bot:
                add_work(stats, n);
                break;
            case ModalOp::Var:
                row = model.val_row(arena.name(f));
                add_work(stats, n);
                break;
            case ModalOp::Impl: {
                // Classical implication, pointwise.
                row = table.row(arena.right(f).id) | ~table.row(arena.left(f).id);
                add_work(stats, n);
                break;
            }
            case ModalOp::Box: {
                const Bits& sub = table.row(arena.child(f).id);
                for (std::size_t s = 0; s < n; ++s) {
                    if (rel[s].is_subset_of(sub)) row.set(s);
                    add_work(stats, n);
                }
                break;
            }
        }
        table.set(f.id, std::move(row));
    }
    return table;
}

bool check_at(const McInstance& inst, std::string_view state) {
    validate_shape(inst);
    require_admissible(inst.model, inst.logic);
    const std::size_t s = inst.model.require_index(state);
    if (inst.is_modal()) {
        SatTable t = eval_modal(*inst.arena, inst.model, inst.modal_formula());
        return t.row(inst.modal_formula().id)[s];
    }
    SatTable t = eval_int(*inst.arena, inst.model, inst.int_formula());
    return t.row(inst.int_formula().id)[s];
}

bool check(const McInstance& inst) { return check_at(inst, inst.state); }

// --------------------------------------------------------------------------
// Monotonicity
// --------------------------------------------------------------------------

bool upward_closed(const KripkeModel& model, const Bits& set) {
    const Relation& rel = model.relation();
    for (std::size_t s = set.find_first(); s != Bits::npos; s = set.find_next(s))
        if (!rel[s].is_subset_of(set)) return false;
    return true;
}

bool monotone_table(const KripkeModel& model, const SatTable& table) {
    for (const auto& [id, row] : table.rows())
        if (!upward_closed(model, row)) return false;
    return true;
}

} // namespace imc
