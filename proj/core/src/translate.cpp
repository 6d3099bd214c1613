#include "imc/translate.hpp"

#include <unordered_map>

namespace imc {

namespace {

// Shared homomorphic scheme; only the variable clause differs.
template <typename VarClause>
ModalF translate(FormulaArena& arena, IntF root, VarClause&& var_clause) {
    std::unordered_map<std::uint32_t, ModalF> memo;
    auto go = [&](auto&& self, IntF f) -> ModalF {
        if (auto it = memo.find(f.id); it != memo.end()) return it->second;
        ModalF out{0};
        switch (arena.op(f)) {
            case IntOp::Bot:
                out = arena.mbot();
                break;
            case IntOp::Var:
                out = var_clause(arena.name(f));
                break;
            case IntOp::And:
                out = arena.mand(self(self, arena.left(f)), self(self, arena.right(f)));
                break;
            case IntOp::Or:
                out = arena.mor(self(self, arena.left(f)), self(self, arena.right(f)));
                break;
            case IntOp::Impl:
                out = arena.mbox(
                    arena.mimpl(self(self, arena.left(f)), self(self, arena.right(f))));
                break;
        }
        memo.emplace(f.id, out);
        return out;
    };
    return go(go, root);
}

} // namespace

ModalF gt(FormulaArena& arena, IntF f) {
    return translate(arena, f, [&](const std::string& name) {
        ModalF v = arena.mvar(name);
        return arena.mand(v, arena.mbox(v));
    });
}

ModalF gt_prime(FormulaArena& arena, IntF f) {
    return translate(arena, f,
                     [&](const std::string& name) { return arena.mvar(name); });
}

} // namespace imc
