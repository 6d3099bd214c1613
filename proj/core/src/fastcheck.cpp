#include "imc/fastcheck.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "imc/semantics.hpp"

namespace imc {

std::uint64_t FormulaIndex::value() const {
    if (omega_) throw std::logic_error("omega has no natural value");
    return v_;
}

std::string FormulaIndex::to_string() const {
    return omega_ ? "omega" : std::to_string(v_);
}

IntF visser_alpha(FormulaArena& arena, std::uint64_t i) {
    IntF f = arena.ibot();
    for (std::uint64_t k = 0; k < i; ++k) f = arena.iimpl(arena.itop(), f);
    return f;
}

IntF visser_alpha(FormulaArena& arena, const FormulaIndex& i) {
    return i.is_omega() ? arena.itop() : visser_alpha(arena, i.value());
}

FormulaIndex formula_index(const FormulaArena& arena, IntF f) {
    std::unordered_map<std::uint32_t, FormulaIndex> memo;
    auto go = [&](auto&& self, IntF g) -> FormulaIndex {
        if (auto it = memo.find(g.id); it != memo.end()) return it->second;
        FormulaIndex out = FormulaIndex::nat(0);
        switch (arena.op(g)) {
            case IntOp::Bot:
                break;
            case IntOp::Var:
                throw InputError("formula index requires a variable-free formula");
            case IntOp::And:
                out = std::min(self(self, arena.left(g)), self(self, arena.right(g)),
                               [](const FormulaIndex& a, const FormulaIndex& b) {
                                   return a < b;
                               });
                break;
            case IntOp::Or:
                out = std::max(self(self, arena.left(g)), self(self, arena.right(g)),
                               [](const FormulaIndex& a, const FormulaIndex& b) {
                                   return a < b;
                               });
                break;
            case IntOp::Impl: {
                FormulaIndex a = self(self, arena.left(g));
                FormulaIndex b = self(self, arena.right(g));
                out = a <= b ? FormulaIndex::omega() : FormulaIndex::nat(b.value() + 1);
                break;
            }
        }
        memo.emplace(g.id, out);
        return out;
    };
    return go(go, f);
}

namespace {

std::uint64_t lp_rec(const Relation& rel, std::size_t w,
                     std::vector<std::int64_t>& memo, std::vector<bool>& on_stack) {
    if (memo[w] >= 0) return static_cast<std::uint64_t>(memo[w]);
    if (on_stack[w]) throw CycleError("cycle reachable from state " + std::to_string(w));
    on_stack[w] = true;
    std::uint64_t best = 0;
    const Bits& succ = rel[w];
    for (std::size_t v = succ.find_first(); v != Bits::npos; v = succ.find_next(v))
        best = std::max(best, 1 + lp_rec(rel, v, memo, on_stack));
    on_stack[w] = false;
    memo[w] = static_cast<std::int64_t>(best);
    return best;
}

} // namespace

std::uint64_t lp(const KripkeModel& model, std::size_t w) {
    if (w >= model.size()) throw InputError("state index out of range");
    std::vector<std::int64_t> memo(model.size(), -1);
    std::vector<bool> on_stack(model.size(), false);
    return lp_rec(model.relation(), w, memo, on_stack);
}

KripkeModel linear_model(std::uint64_t n) {
    std::vector<std::string> names;
    names.reserve(n + 1);
    for (std::uint64_t k = 0; k <= n; ++k) names.push_back("l" + std::to_string(k));
    KripkeModel model(std::move(names));
    for (std::uint64_t k = 0; k <= n; ++k)
        for (std::uint64_t j = 0; j < k; ++j) model.add_edge(k, j);
    return model;
}

bool check_fpl0(const FormulaArena& arena, const KripkeModel& model, IntF f,
                std::string_view state) {
    require_admissible(model, LogicClass::FPL);
    const std::size_t w = model.require_index(state);
    return FormulaIndex::nat(lp(model, w)) < formula_index(arena, f);
}

bool check_prl0(const FormulaArena& arena, const KripkeModel& model, ModalF f,
                std::string_view state) {
    require_admissible(model, LogicClass::PrL);
    if (analyze(arena, f).variable_count != 0)
        throw InputError("provability-logic fast check requires a variable-free formula");
    const std::size_t w = model.require_index(state);
    const std::uint64_t n = lp(model, w);
    KripkeModel ln = linear_model(n);
    SatTable table = eval_modal(arena, ln, f);
    return table.row(f.id)[static_cast<std::size_t>(n)];
}

std::pair<IntF, IntF> longest_path_instance(FormulaArena& arena,
                                            const std::vector<std::vector<std::size_t>>& adj,
                                            std::size_t v, std::uint64_t n) {
    if (v >= adj.size()) throw InputError("start node out of range");
    // Reject cycles anywhere in the digraph, not just on paths from v.
    std::vector<int> color(adj.size(), 0);
    auto dfs = [&](auto&& self, std::size_t u) -> void {
        color[u] = 1;
        for (std::size_t w : adj[u]) {
            if (w >= adj.size()) throw InputError("edge target out of range");
            if (color[w] == 1) throw CycleError("input digraph has a cycle");
            if (color[w] == 0) self(self, w);
        }
        color[u] = 2;
    };
    for (std::size_t u = 0; u < adj.size(); ++u)
        if (color[u] == 0) dfs(dfs, u);
    return {visser_alpha(arena, n + 1), visser_alpha(arena, n)};
}

} // namespace imc
