#include "imc/reductions.hpp"

#include <map>
#include <memory>

#include "imc/translate.hpp"

namespace imc {

namespace {

std::vector<std::string> node_names(const SliceGraph& g) {
    std::vector<std::string> names;
    names.reserve(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) names.push_back(g.name(v));
    return names;
}

void reject_collisions(const SliceGraph& g, const std::vector<std::string>& reserved) {
    for (const auto& name : reserved)
        if (g.index_of(name))
            throw InputError("input node '" + name +
                             "' collides with a synthesized state name");
}

// Copies an n-state relation into the top-left corner of an N-state one.
Relation widen(const Relation& rel, std::size_t n_new) {
    Relation out = make_relation(n_new);
    for (std::size_t i = 0; i < rel.size(); ++i) {
        Bits row = rel[i];
        row.resize(n_new);
        out[i] = std::move(row);
    }
    return out;
}

} // namespace

// --------------------------------------------------------------------------
// Logic K, zero variables
// --------------------------------------------------------------------------

K0Reduction to_k0(const AsAgapInstance& inst) {
    require_valid(inst);
    const SliceGraph& g = inst.graph;
    const std::size_t m = g.num_slices();

    KripkeModel model(node_names(g));
    for (std::size_t v = 0; v < g.size(); ++v)
        for (std::size_t w : g.successors(v)) model.add_edge(v, w);
    model.add_edge(inst.target, inst.target);

    auto arena = std::make_shared<FormulaArena>();
    // top_s = [](false -> false); the strict spelling of "some successor".
    ModalF top_s = arena->mbox(arena->mimpl(arena->mbot(), arena->mbot()));
    // c0 = [](top_s -> [](top_s -> false)), the strict rewriting of [][]false.
    ModalF phi = arena->mbox(
        arena->mimpl(top_s, arena->mbox(arena->mimpl(top_s, arena->mbot()))));
    // Each wrap [](phi -> false) negates under a box; two wraps spell []<>.
    for (std::size_t i = 2; i < m; ++i)
        phi = arena->mbox(arena->mimpl(phi, arena->mbot()));

    McInstance out{.arena = std::move(arena),
                   .formula = phi,
                   .model = std::move(model),
                   .state = g.name(inst.source),
                   .logic = LogicClass::K,
                   .polarity = Polarity::Complement};
    return {std::move(out), m};
}

// --------------------------------------------------------------------------
// Logic KC, implicational, m+1 variables
// --------------------------------------------------------------------------

KcImplReduction to_kc_impl(const AsAgapInstance& inst) {
    require_valid(inst);
    const SliceGraph& g = inst.graph;
    reject_collisions(g, {"top"});
    const std::size_t n = g.size();
    const std::size_t m = g.num_slices();
    const std::size_t top = n;

    std::vector<std::string> names = node_names(g);
    names.push_back("top");
    KripkeModel model(std::move(names));

    Relation rel = widen(pseudo_transitive_closure(g), n + 1);
    for (std::size_t v = 0; v < n; ++v) rel[v].set(top);
    model.set_relation(reflexive_closure(std::move(rel)));

    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= m + 1; ++i) {
        std::string var = "a" + std::to_string(i);
        Bits row(n + 1);
        row.set(top);
        if (i <= m - 1) {
            for (std::size_t v = 0; v < n; ++v)
                if (g.slice_of(v) >= i + 1) row.set(v);
        } else if (i == m) {
            row.set(inst.target);
        }
        model.set_val_row(var, std::move(row));
        vars.push_back(std::move(var));
    }

    auto arena = std::make_shared<FormulaArena>();
    std::vector<IntF> psi(m);
    psi[m - 1] = arena->iimpl(arena->ivar(vars[m - 1]), arena->ivar(vars[m]));
    for (std::size_t j = m - 1; j >= 1; --j)
        psi[j - 1] = arena->iimpl(psi[j], arena->ivar(vars[j - 1]));

    McInstance out{.arena = std::move(arena),
                   .formula = psi[0],
                   .model = std::move(model),
                   .state = g.name(inst.source),
                   .logic = LogicClass::KC,
                   .polarity = Polarity::Same};
    return {std::move(out), std::move(psi), std::move(vars)};
}

// --------------------------------------------------------------------------
// Logic FPL, implicational, one variable
// --------------------------------------------------------------------------

Fpl1Reduction to_fpl1_impl(const AsAgapInstance& inst) {
    require_valid(inst);
    const SliceGraph& g = inst.graph;
    const std::size_t n = g.size();
    const std::size_t m = g.num_slices();

    KripkeModel model(node_names(g));
    model.set_relation(pseudo_transitive_closure(g));
    Bits p_row(n);
    p_row.set(inst.target);
    model.set_val_row("p", std::move(p_row));

    auto arena = std::make_shared<FormulaArena>();
    std::vector<IntF> alpha(m), psi(m);
    alpha[m - 1] = arena->ibot();
    psi[m - 1] = arena->ivar("p");
    for (std::size_t i = m - 1; i >= 1; --i) {
        alpha[i - 1] = arena->iimpl(arena->itop(), alpha[i]);
        psi[i - 1] = arena->iimpl(psi[i], alpha[i]);
    }

    McInstance out{.arena = std::move(arena),
                   .formula = psi[0],
                   .model = std::move(model),
                   .state = g.name(inst.source),
                   .logic = LogicClass::FPL,
                   .polarity = Polarity::Complement};
    return {std::move(out), std::move(alpha), std::move(psi)};
}

// --------------------------------------------------------------------------
// Logic BPL, variable-free, -> and | only
// --------------------------------------------------------------------------

Bpl0Reduction to_bpl0(const AsAgapInstance& inst) {
    require_valid(inst);
    const SliceGraph& g = inst.graph;
    const std::size_t n = g.size();
    const std::size_t m = g.num_slices();

    // Three descending-chain frames; frame k holds b_k plus a_1^k..a_{k+2}^k.
    std::vector<std::string> aux;
    std::vector<std::size_t> frame_base(4, 0);
    for (std::size_t k = 1; k <= 3; ++k) {
        frame_base[k] = n + aux.size();
        aux.push_back("b" + std::to_string(k));
        for (std::size_t i = 1; i <= k + 2; ++i)
            aux.push_back("a_" + std::to_string(i) + "^" + std::to_string(k));
    }
    reject_collisions(g, aux);
    auto b_idx = [&](std::size_t k) { return frame_base[k]; };
    auto a_idx = [&](std::size_t k, std::size_t i) { return frame_base[k] + i; };

    std::vector<std::string> names = node_names(g);
    names.insert(names.end(), aux.begin(), aux.end());
    KripkeModel model(std::move(names));

    Relation rel = widen(pseudo_transitive_closure(g), n + aux.size());
    for (std::size_t k = 1; k <= 3; ++k) {
        rel[b_idx(k)].set(b_idx(k));
        rel[a_idx(k, k + 2)].set(b_idx(k));
        for (std::size_t i = 1; i <= k + 2; ++i)
            for (std::size_t j = 1; j < i; ++j) rel[a_idx(k, i)].set(a_idx(k, j));
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (v != inst.target) rel[v].set(a_idx(1, 3));
        rel[v].set(a_idx(2, 4));
        rel[v].set(a_idx(3, 5));
    }
    model.set_relation(transitive_closure(std::move(rel)));

    auto arena = std::make_shared<FormulaArena>();
    std::vector<IntF> alpha(4);
    alpha[0] = arena->iimpl(arena->itop(), arena->ibot());
    for (std::size_t i = 1; i < 4; ++i)
        alpha[i] = arena->iimpl(arena->itop(), alpha[i - 1]);
    IntF beta1 = arena->iimpl(arena->iimpl(alpha[2], alpha[1]),
                              arena->ior(arena->iimpl(alpha[1], alpha[0]), alpha[2]));
    IntF beta2 = arena->iimpl(arena->iimpl(alpha[3], alpha[2]),
                              arena->ior(arena->iimpl(alpha[2], alpha[1]), alpha[3]));

    // theta_m and psi_m are the placeholders of the two-variable family,
    // instantiated directly with beta2 and beta1.
    std::vector<IntF> theta(m), psi(m);
    theta[m - 1] = beta2;
    psi[m - 1] = beta1;
    for (std::size_t i = m - 1; i >= 1; --i) {
        theta[i - 1] = arena->iimpl(arena->itop(), theta[i]);
        psi[i - 1] = arena->iimpl(psi[i], theta[i]);
    }

    McInstance out{.arena = std::move(arena),
                   .formula = psi[0],
                   .model = std::move(model),
                   .state = g.name(inst.source),
                   .logic = LogicClass::BPL,
                   .polarity = Polarity::Complement};
    return {std::move(out), std::move(alpha), beta1, beta2, std::move(aux)};
}

// --------------------------------------------------------------------------
// Logic S42, one variable
// --------------------------------------------------------------------------

S42Reduction to_s42_one_var(const AsAgapInstance& inst) {
    require_valid(inst);
    const SliceGraph& g = inst.graph;
    reject_collisions(g, {"u", "t1", "t2", "top"});
    const std::size_t n = g.size();
    const std::size_t m = g.num_slices();
    const std::size_t u = n, t1 = n + 1, t2 = n + 2, top = n + 3;

    std::vector<std::string> names = node_names(g);
    names.insert(names.end(), {"u", "t1", "t2", "top"});
    KripkeModel model(std::move(names));

    Relation rel = widen(pseudo_transitive_closure(g), n + 4);
    for (std::size_t v = 0; v < n; ++v) {
        rel[v].set(top);                       // slice m+2 from every slice <= m
        if (g.slice_of(v) <= m - 1) {          // slice m+1 from every slice <= m-1
            rel[v].set(u);
            rel[v].set(t1);
            rel[v].set(t2);
        } else {
            rel[v].set(u);                     // last slice sees u directly
        }
    }
    rel[inst.target].set(t1);
    rel[inst.target].set(t2);
    rel[u].set(top);
    rel[t1].set(top);
    rel[t2].set(top);
    rel[t1].set(t2);
    rel[t2].set(t1);
    model.set_relation(reflexive_closure(std::move(rel)));

    Bits a_row(n + 4);
    for (std::size_t v = 0; v < n; ++v)
        if (g.slice_of(v) % 2 == 0) a_row.set(v);
    a_row.set(t2);
    a_row.set(top);
    model.set_val_row("a", std::move(a_row));

    auto arena = std::make_shared<FormulaArena>();
    ModalF a = arena->mvar("a");
    ModalF na = arena->mneg(a);
    ModalF eta = arena->mand(na, arena->mdia(arena->mand(a, arena->mdia(na))));

    // The marker conjunct sits on the state itself: delta_i holds on slices of
    // parity i only, which keeps the quantifier guards in lambda exact.
    std::vector<ModalF> delta(m), lambda(m);
    delta[m - 1] =
        arena->mand(a, arena->mdia(arena->mand(na, arena->mneg(eta))));
    lambda[m - 1] = arena->mand(a, arena->mdia(eta));
    for (std::size_t i = m - 1; i >= 1; --i) {
        if (i % 2 == 1) {
            delta[i - 1] = arena->mand(na, arena->mdia(delta[i]));
            lambda[i - 1] =
                arena->mand(na, arena->mdia(arena->mand(delta[i], lambda[i])));
        } else {
            delta[i - 1] = arena->mand(a, arena->mdia(delta[i]));
            lambda[i - 1] =
                arena->mand(a, arena->mbox(arena->mimpl(delta[i], lambda[i])));
        }
    }

    McInstance out{.arena = std::move(arena),
                   .formula = lambda[0],
                   .model = std::move(model),
                   .state = g.name(inst.source),
                   .logic = LogicClass::S42,
                   .polarity = Polarity::Same};
    return {std::move(out), eta, std::move(delta), std::move(lambda)};
}

// --------------------------------------------------------------------------
// Generic directed-preorder models and the two-variable simulation
// --------------------------------------------------------------------------

std::size_t generic_level_size(std::size_t k) {
    if (k == 0) throw InputError("generic levels start at 1");
    std::size_t size = 3;
    for (std::size_t i = 1; i < k; ++i) size = (size - 1) * (size - 1);
    return size;
}

GenericModel build_generic_model(std::size_t t) {
    if (t == 0) throw InputError("generic model needs at least one level");

    std::vector<std::vector<std::string>> levels(t + 1);
    levels[0] = {"c", "d1", "d2", "d3", "e1", "e2", "e3", "e4"};
    for (std::size_t k = 1; k <= t; ++k) {
        const std::size_t nk = generic_level_size(k);
        for (std::size_t i = 1; i <= nk; ++i)
            levels[k].push_back("a_" + std::to_string(i) + "^" + std::to_string(k));
        for (std::size_t i = 1; i <= nk; ++i)
            levels[k].push_back("b_" + std::to_string(i) + "^" + std::to_string(k));
    }

    std::vector<std::size_t> offset(t + 1, 0);
    std::vector<std::string> names;
    for (std::size_t k = 0; k <= t; ++k) {
        offset[k] = names.size();
        names.insert(names.end(), levels[k].begin(), levels[k].end());
    }
    const std::size_t total = names.size();
    KripkeModel model(std::move(names));

    auto a_of = [&](std::size_t k, std::size_t i) { return offset[k] + (i - 1); };
    auto b_of = [&](std::size_t k, std::size_t i) {
        return offset[k] + generic_level_size(k) + (i - 1);
    };
    const std::size_t c = 0, d1 = 1, d2 = 2, d3 = 3;
    const std::size_t e1 = 4, e2 = 5, e3 = 6, e4 = 7;

    Relation rel = make_relation(total);
    auto add = [&](std::size_t from, std::initializer_list<std::size_t> tos) {
        for (std::size_t to : tos) rel[from].set(to);
    };
    add(d1, {c});
    add(d2, {c});
    add(d3, {c});
    add(e1, {d1, d3});
    add(e2, {d1, d2});
    add(e3, {d2, d3});
    add(e4, {d1, d2, d3});
    add(b_of(1, 3), {e1, e2});
    add(b_of(1, 2), {e1, e3});
    add(b_of(1, 1), {e1, e4});
    add(a_of(1, 3), {e2, e3});
    add(a_of(1, 2), {e2, e4});
    add(a_of(1, 1), {e3, e4});
    for (std::size_t k = 1; k < t; ++k) {
        const std::size_t nk = generic_level_size(k);
        for (std::size_t i = 2; i <= nk; ++i) {
            for (std::size_t j = 2; j <= nk; ++j) {
                const std::size_t mu = (j - 1) + (nk - 1) * (i - 2);
                add(a_of(k + 1, mu), {b_of(k, 1), a_of(k, i), b_of(k, j)});
                add(b_of(k + 1, mu), {a_of(k, 1), a_of(k, i), b_of(k, j)});
            }
        }
    }
    // Level-jumping edges: level k sees everything at levels <= k-2.
    for (std::size_t k = 2; k <= t; ++k)
        for (std::size_t w = offset[k]; w < offset[k] + levels[k].size(); ++w)
            for (std::size_t x = 0; x < offset[k - 1]; ++x) rel[w].set(x);

    model.set_relation(reflexive_closure(transitive_closure(std::move(rel))));

    Bits p_row(total), q_row(total);
    p_row.set(c);
    p_row.set(d1);
    q_row.set(c);
    q_row.set(d2);
    model.set_val_row("p", std::move(p_row));
    model.set_val_row("q", std::move(q_row));

    return {std::move(model), std::move(levels), t};
}

ReplacementFormulas build_replacement_formulas(FormulaArena& arena, std::size_t t) {
    if (t == 0) throw InputError("generic levels start at 1");
    ReplacementFormulas out;
    IntF p = arena.ivar("p");
    IntF q = arena.ivar("q");
    out.delta = {arena.iimpl(p, q), arena.iimpl(q, p), arena.ior(p, q)};
    const auto& d = out.delta;
    IntF e1 = arena.iimpl(d[1], arena.ior(d[0], d[2]));
    // e2's antecedent must hold at e2 itself, yet p|q is false everywhere
    // below the d's, so p|q cannot serve directly. (d1&d2)->(p|q) works: d3
    // is the only state satisfying both implications while refuting p|q, so
    // that antecedent is refuted exactly at d3-seers -- which e2 is not.
    IntF chi3 = arena.iimpl(arena.iand(d[0], d[1]), d[2]);
    IntF e2 = arena.iimpl(chi3, arena.ior(d[0], d[1]));
    IntF e3 = arena.iimpl(d[0], arena.ior(d[1], d[2]));
    IntF e4 = arena.iimpl(arena.iand(arena.iand(e1, e2), e3),
                          arena.ior(arena.ior(d[0], d[1]), d[2]));
    out.eps = {e1, e2, e3, e4};

    out.alpha.resize(t + 1);
    out.beta.resize(t + 1);
    out.alpha[1] = {arena.iimpl(arena.iand(e1, e2), arena.ior(e3, e4)),
                    arena.iimpl(arena.iand(e1, e3), arena.ior(e2, e4)),
                    arena.iimpl(arena.iand(e1, e4), arena.ior(e2, e3))};
    out.beta[1] = {arena.iimpl(arena.iand(e2, e3), arena.ior(e1, e4)),
                   arena.iimpl(arena.iand(e2, e4), arena.ior(e1, e3)),
                   arena.iimpl(arena.iand(e3, e4), arena.ior(e1, e2))};
    for (std::size_t k = 1; k < t; ++k) {
        const std::size_t nk = generic_level_size(k);
        const std::size_t next = (nk - 1) * (nk - 1);
        out.alpha[k + 1].resize(next);
        out.beta[k + 1].resize(next);
        const IntF a1 = out.alpha[k][0];
        const IntF b1 = out.beta[k][0];
        for (std::size_t i = 2; i <= nk; ++i) {
            for (std::size_t j = 2; j <= nk; ++j) {
                const std::size_t mu = (j - 1) + (nk - 1) * (i - 2);
                const IntF ai = out.alpha[k][i - 1];
                const IntF bj = out.beta[k][j - 1];
                out.alpha[k + 1][mu - 1] =
                    arena.iimpl(a1, arena.ior(arena.ior(b1, ai), bj));
                out.beta[k + 1][mu - 1] =
                    arena.iimpl(b1, arena.ior(arena.ior(a1, ai), bj));
            }
        }
    }
    return out;
}

namespace {

IntF substitute(FormulaArena& arena, IntF f, const std::map<std::string, IntF>& repl) {
    std::map<std::uint32_t, IntF> memo;
    auto go = [&](auto&& self, IntF g) -> IntF {
        if (auto it = memo.find(g.id); it != memo.end()) return it->second;
        IntF out{0};
        switch (arena.op(g)) {
            case IntOp::Bot:
                out = arena.ibot();
                break;
            case IntOp::Var:
                out = repl.at(arena.name(g));
                break;
            case IntOp::And:
                out = arena.iand(self(self, arena.left(g)), self(self, arena.right(g)));
                break;
            case IntOp::Or:
                out = arena.ior(self(self, arena.left(g)), self(self, arena.right(g)));
                break;
            case IntOp::Impl:
                out = arena.iimpl(self(self, arena.left(g)), self(self, arena.right(g)));
                break;
        }
        memo.emplace(g.id, out);
        return out;
    };
    return go(go, f);
}

} // namespace

Kc2Reduction ipc_to_kc2(const McInstance& input) {
    validate_shape(input);
    if (input.logic != LogicClass::IPC)
        throw InputError("two-variable simulation consumes IPC instances only");
    IntF f = input.int_formula();
    FragmentReport report = analyze(*input.arena, f);
    if (!report.implicational)
        throw InputError("two-variable simulation requires an implicational formula");
    // 'false' must be rejected: every generic state satisfies every variable
    // replacement, hence every bot-free translated formula, so generic states
    // can never witness a refutation of an implication. A bot leaf voids that
    // argument (bot is refuted throughout the generic part) and the
    // input/output truth values genuinely diverge.
    {
        std::vector<IntF> stack{f};
        std::set<std::uint32_t> seen;
        while (!stack.empty()) {
            IntF g = stack.back();
            stack.pop_back();
            if (!seen.insert(g.id).second) continue;
            switch (input.arena->op(g)) {
                case IntOp::Bot:
                    throw InputError(
                        "two-variable simulation requires a bot-free implicational "
                        "formula (variables and '->' only)");
                case IntOp::Var:
                    break;
                default:
                    stack.push_back(input.arena->left(g));
                    stack.push_back(input.arena->right(g));
            }
        }
    }
    require_admissible(input.model, LogicClass::IPC);

    const std::size_t m = report.variable_count;
    std::vector<std::string> var_order(report.variable_set.begin(),
                                       report.variable_set.end());
    std::size_t k = 2;
    while (generic_level_size(k) <= m) ++k;

    auto arena = input.arena;
    ReplacementFormulas formulas = build_replacement_formulas(*arena, k);
    GenericModel generic = build_generic_model(k);

    const std::size_t w_count = input.model.size();
    const std::size_t g_count = generic.model.size();
    for (const auto& name : generic.model.states())
        if (input.model.index_of(name))
            throw InputError("input state '" + name +
                             "' collides with a synthesized state name");

    std::map<std::string, IntF> repl;
    for (std::size_t i = 0; i < m; ++i)
        repl[var_order[i]] =
            arena->ior(formulas.alpha[k][i], formulas.beta[k][i]);
    IntF phi2 = substitute(*arena, f, repl);

    std::vector<std::string> names = input.model.states();
    names.insert(names.end(), generic.model.states().begin(),
                 generic.model.states().end());
    KripkeModel model(std::move(names));

    Relation rel = widen(input.model.relation(), w_count + g_count);
    for (std::size_t i = 0; i < g_count; ++i)
        for (std::size_t j = generic.model.successors(i).find_first(); j != Bits::npos;
             j = generic.model.successors(i).find_next(j))
            rel[w_count + i].set(w_count + j);

    std::size_t level_k_offset = 0;
    for (std::size_t l = 0; l < k; ++l) level_k_offset += generic.levels[l].size();
    const std::size_t nk = generic_level_size(k);
    auto a_of = [&](std::size_t i) { return w_count + level_k_offset + (i - 1); };
    auto b_of = [&](std::size_t i) { return w_count + level_k_offset + nk + (i - 1); };

    for (std::size_t w = 0; w < w_count; ++w) {
        // Variable columns: w sees the i-th top-level pair iff w refutes v_i.
        for (std::size_t i = 1; i <= m; ++i) {
            if (!input.model.val_row(var_order[i - 1])[w]) {
                rel[w].set(a_of(i));
                rel[w].set(b_of(i));
            }
        }
        rel[w].set(a_of(m + 1));
        rel[w].set(b_of(m + 1));
        // Every input state sees all generic levels below the top one.
        for (std::size_t x = 0; x < level_k_offset; ++x) rel[w].set(w_count + x);
    }
    model.set_relation(reflexive_closure(std::move(rel)));

    Bits p_row(w_count + g_count), q_row(w_count + g_count);
    const Bits& gp = generic.model.val_row("p");
    const Bits& gq = generic.model.val_row("q");
    for (std::size_t i = 0; i < g_count; ++i) {
        if (gp[i]) p_row.set(w_count + i);
        if (gq[i]) q_row.set(w_count + i);
    }
    model.set_val_row("p", std::move(p_row));
    model.set_val_row("q", std::move(q_row));

    McInstance out{.arena = std::move(arena),
                   .formula = phi2,
                   .model = std::move(model),
                   .state = input.state,
                   .logic = LogicClass::KC,
                   .polarity = input.polarity};
    return {std::move(out), k, std::move(formulas), std::move(generic),
            std::move(var_order)};
}

McInstance chain_to_modal(const McInstance& input) {
    validate_shape(input);
    if (input.is_modal())
        throw InputError("companion translation consumes intuitionistic instances");
    const LogicClass target = modal_companion(input.logic);
    ModalF translated = gt_prime(*input.arena, input.int_formula());
    return {.arena = input.arena,
            .formula = translated,
            .model = input.model,
            .state = input.state,
            .logic = target,
            .polarity = input.polarity};
}

} // namespace imc
