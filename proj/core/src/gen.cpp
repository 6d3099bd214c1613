#include "imc/gen.hpp"

#include <algorithm>
#include <string>

namespace imc {

AsAgapInstance random_asagap(Rng& rng, std::size_t max_slices, std::size_t max_per_slice) {
    if (max_slices < 2 || max_per_slice < 1)
        throw InputError("slice-graph generator needs max_slices >= 2, max_per_slice >= 1");
    const std::size_t m = 2 * rng.range(1, max_slices / 2);

    AsAgapInstance inst;
    inst.graph.set_num_slices(m);
    std::size_t counter = 0;
    for (std::size_t i = 1; i <= m; ++i) {
        const std::size_t size = rng.range(1, max_per_slice);
        for (std::size_t j = 0; j < size; ++j)
            inst.graph.add_node("v" + std::to_string(counter++), i);
    }
    for (std::size_t i = 1; i < m; ++i) {
        const auto& next = inst.graph.nodes_in_slice(i + 1);
        for (std::size_t v : inst.graph.nodes_in_slice(i)) {
            const std::size_t want =
                std::min<std::size_t>(rng.range(1, 3), next.size());
            // Draw `want` distinct successors from the next slice.
            std::vector<std::size_t> pool(next);
            for (std::size_t j = 0; j < want; ++j) {
                const std::size_t pick = rng.below(pool.size());
                inst.graph.add_edge(v, pool[pick]);
                pool.erase(pool.begin() + pick);
            }
        }
    }
    const auto& first = inst.graph.nodes_in_slice(1);
    const auto& last = inst.graph.nodes_in_slice(m);
    inst.source = first[rng.below(first.size())];
    inst.target = last[rng.below(last.size())];
    return inst;
}

AgapInstance random_agap(Rng& rng, std::size_t max_nodes) {
    if (max_nodes < 1) throw InputError("alternating-graph generator needs >= 1 node");
    const std::size_t n = rng.range(1, max_nodes);
    AgapInstance inst;
    for (std::size_t v = 0; v < n; ++v)
        inst.graph.add_node("v" + std::to_string(v),
                            rng.coin() ? NodeKind::Existential : NodeKind::Universal);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
            if (inst.graph.kind(v) != inst.graph.kind(w) && rng.coin())
                inst.graph.add_edge(v, w);
    inst.source = rng.below(n);
    inst.target = rng.below(n);
    return inst;
}

namespace {

std::vector<std::string> state_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    return names;
}

// Random edges pointing strictly forward in state order (a DAG), then closed
// transitively; irreflexive by construction.
Relation random_strict_relation(Rng& rng, std::size_t n) {
    Relation rel = make_relation(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.chance(1, 3)) rel[i].set(j);
    return transitive_closure(std::move(rel));
}

} // namespace

KripkeModel random_int_model(Rng& rng, LogicClass logic, std::size_t max_states,
                             const std::vector<std::string>& vars) {
    if (!is_intuitionistic(logic) || logic == LogicClass::KC)
        throw InputError("generator supports BPL, IPC and FPL models");
    if (max_states < 1) throw InputError("need at least one state");
    const std::size_t n = rng.range(1, max_states);
    KripkeModel model(state_names(n));

    Relation rel = random_strict_relation(rng, n);
    if (logic == LogicClass::IPC) {
        rel = reflexive_closure(std::move(rel));
    } else if (logic == LogicClass::BPL) {
        // Transitivity alone is required; sprinkle a few reflexive points.
        for (std::size_t i = 0; i < n; ++i)
            if (rng.chance(1, 4)) rel[i].set(i);
    }
    model.set_relation(std::move(rel));

    for (const auto& var : vars) {
        Bits row(n);
        for (std::size_t i = 0; i < n; ++i)
            if (rng.chance(1, 3)) row.set(i);
        // Upward-close the seed set so the valuation is monotone.
        for (std::size_t i = row.find_first(); i != Bits::npos; i = row.find_next(i))
            row |= model.successors(i);
        model.set_val_row(var, std::move(row));
    }
    return model;
}

KripkeModel random_strict_order_model(Rng& rng, std::size_t max_states,
                                      const std::vector<std::string>& vars) {
    if (max_states < 1) throw InputError("need at least one state");
    const std::size_t n = rng.range(1, max_states);
    KripkeModel model(state_names(n));
    model.set_relation(random_strict_relation(rng, n));
    for (const auto& var : vars) {
        Bits row(n);
        for (std::size_t i = 0; i < n; ++i)
            if (rng.coin()) row.set(i);
        model.set_val_row(var, std::move(row));
    }
    return model;
}

namespace {

// Size-budgeted recursive generation: a budget of 1 forces a leaf; otherwise
// binary nodes split the remainder uniformly.
IntF random_int_rec(FormulaArena& arena, Rng& rng, std::size_t budget,
                    const std::vector<std::string>& vars, bool implicational_only) {
    if (budget <= 2 || rng.chance(1, 4)) {
        if (implicational_only) return arena.ivar(vars[rng.below(vars.size())]);
        if (!vars.empty() && rng.chance(2, 3))
            return arena.ivar(vars[rng.below(vars.size())]);
        return arena.ibot();
    }
    // One node for the root; the children split the rest, each getting >= 1.
    const std::size_t lb = rng.range(1, budget - 2);
    const std::size_t rb = budget - 1 - lb;
    IntF a = random_int_rec(arena, rng, lb, vars, implicational_only);
    IntF b = random_int_rec(arena, rng, rb, vars, implicational_only);
    if (implicational_only) return arena.iimpl(a, b);
    switch (rng.below(3)) {
        case 0: return arena.iand(a, b);
        case 1: return arena.ior(a, b);
        default: return arena.iimpl(a, b);
    }
}

} // namespace

IntF random_int_formula(FormulaArena& arena, Rng& rng, std::size_t max_size,
                        const std::vector<std::string>& vars) {
    if (max_size < 1) throw InputError("formula size budget must be positive");
    return random_int_rec(arena, rng, rng.range(1, max_size), vars, false);
}

IntF random_implicational_formula(FormulaArena& arena, Rng& rng, std::size_t max_size,
                                  const std::vector<std::string>& vars) {
    if (max_size < 1) throw InputError("formula size budget must be positive");
    if (vars.empty())
        throw InputError("bot-free implicational formulas need at least one variable");
    return random_int_rec(arena, rng, rng.range(1, max_size), vars, true);
}

ModalF random_modal_formula(FormulaArena& arena, Rng& rng, std::size_t max_size) {
    if (max_size < 1) throw InputError("formula size budget must be positive");
    auto rec = [&](auto&& self, std::size_t budget) -> ModalF {
        if (budget <= 1 || rng.chance(1, 4)) return arena.mbot();
        if (budget == 2 || rng.chance(1, 3)) return arena.mbox(self(self, budget - 1));
        const std::size_t lb = rng.range(1, budget - 2);
        ModalF a = self(self, lb);
        ModalF b = self(self, budget - 1 - lb);
        return arena.mimpl(a, b);
    };
    return rec(rec, rng.range(1, max_size));
}

} // namespace imc
