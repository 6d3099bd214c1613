#include <doctest.h>

#include <memory>
#include <vector>

#include "imc/formula.hpp"
#include "imc/gen.hpp"
#include "imc/io.hpp"
#include "imc/kripke.hpp"
#include "imc/rng.hpp"
#include "imc/semantics.hpp"

using namespace imc;

namespace {

// Independent reference evaluator for the intuitionistic implication clause
// on reflexive frames: per state, quantify over the successor set with the
// state itself explicitly included. On reflexive frames this must agree with
// the production evaluator (which quantifies over stored successors only).
bool ref_eval_reflexive(const FormulaArena& a, const KripkeModel& m, IntF f,
                        std::size_t s) {
    switch (a.op(f)) {
        case IntOp::Bot: return false;
        case IntOp::Var: return m.val_row(a.name(f))[s];
        case IntOp::And:
            return ref_eval_reflexive(a, m, a.left(f), s) &&
                   ref_eval_reflexive(a, m, a.right(f), s);
        case IntOp::Or:
            return ref_eval_reflexive(a, m, a.left(f), s) ||
                   ref_eval_reflexive(a, m, a.right(f), s);
        case IntOp::Impl: {
            for (std::size_t v = 0; v < m.size(); ++v) {
                const bool reachable = v == s || m.has_edge(s, v);
                if (!reachable) continue;
                if (ref_eval_reflexive(a, m, a.left(f), v) &&
                    !ref_eval_reflexive(a, m, a.right(f), v))
                    return false;
            }
            return true;
        }
    }
    return false;
}

std::size_t tree_size(const FormulaArena& a, IntF f) {
    switch (a.op(f)) {
        case IntOp::Bot:
        case IntOp::Var: return 1;
        default:
            return 1 + tree_size(a, a.left(f)) + tree_size(a, a.right(f));
    }
}

std::size_t tree_size(const FormulaArena& a, ModalF f) {
    switch (a.op(f)) {
        case ModalOp::Bot:
        case ModalOp::Var: return 1;
        case ModalOp::Box: return 1 + tree_size(a, a.child(f));
        case ModalOp::Impl:
            return 1 + tree_size(a, a.left(f)) + tree_size(a, a.right(f));
    }
    return 0;
}

} // namespace

TEST_SUITE("semantics") {

TEST_CASE("bottom denotes the empty set") {
    FormulaArena a;
    KripkeModel m({"s", "t"});
    m.add_edge(0, 1);
    SatTable table = eval_int(a, m, a.ibot());
    CHECK(table.row(a.ibot()).none());
    SatTable mt = eval_modal(a, m, a.mbot());
    CHECK(mt.row(a.mbot()).none());
}

TEST_CASE("identity implication on a reflexive point") {
    FormulaArena a;
    KripkeModel m({"s"});
    m.add_edge(0, 0);
    m.add_val("p", 0);
    IntF f = parse_int(a, "p -> p");
    CHECK(eval_int(a, m, f).row(f)[0]);
}

TEST_CASE("implication quantifies over stored successors only") {
    // Irreflexive two-state chain s -> t with p true at t: both states
    // satisfy true -> p (t vacuously, s through its only successor), and s
    // itself does not satisfy p.
    FormulaArena a;
    KripkeModel m({"s", "t"});
    m.add_edge(0, 1);
    m.add_val("p", 1);
    IntF f = parse_int(a, "true -> p");
    SatTable table = eval_int(a, m, f);
    CHECK(table.row(f)[0]);
    CHECK(table.row(f)[1]);
    CHECK_FALSE(table.row(a.ivar("p"))[0]);
    // On the reflexive closure, s no longer satisfies it (s itself refutes p).
    KripkeModel m2({"s", "t"});
    m2.add_edge(0, 1);
    m2.set_relation(reflexive_closure(m2.relation()));
    m2.add_val("p", 1);
    SatTable t2 = eval_int(a, m2, f);
    CHECK_FALSE(t2.row(f)[0]);
    CHECK(t2.row(f)[1]);
}

TEST_CASE("modal box examples") {
    FormulaArena a;
    ModalF boxbot = a.mbox(a.mbot());

    KripkeModel lone({"s"});
    CHECK(eval_modal(a, lone, boxbot).row(boxbot)[0]);

    KripkeModel loop({"s"});
    loop.add_edge(0, 0);
    CHECK_FALSE(eval_modal(a, loop, boxbot).row(boxbot)[0]);

    // Bare chain a -> b with p at b: a satisfies []p but not p; b satisfies
    // []p vacuously.
    KripkeModel chain({"a", "b"});
    chain.add_edge(0, 1);
    chain.add_val("p", 1);
    ModalF boxp = a.mbox(a.mvar("p"));
    SatTable t = eval_modal(a, chain, boxp);
    CHECK(t.row(boxp)[0]);
    CHECK(t.row(boxp)[1]);
    CHECK_FALSE(t.row(a.mvar("p"))[0]);
}

TEST_CASE("modal implication is classical and pointwise") {
    FormulaArena a;
    KripkeModel m({"s", "t"});
    m.add_edge(0, 1);
    m.add_val("p", 1);
    ModalF f = parse_modal(a, "p -> false");
    SatTable t = eval_modal(a, m, f);
    CHECK(t.row(f)[0]);       // p false at s makes the implication true there
    CHECK_FALSE(t.row(f)[1]); // p true at t, so p -> false fails at t
}

TEST_CASE("eval_int rejects non-admissible models") {
    FormulaArena a;
    KripkeModel broken({"a", "b", "c"});
    broken.add_edge(0, 1);
    broken.add_edge(1, 2); // not transitive
    CHECK_THROWS_AS(eval_int(a, broken, a.ibot()), AdmissibilityError);

    KripkeModel non_monotone({"a", "b"});
    non_monotone.add_edge(0, 1);
    non_monotone.add_val("p", 0);
    CHECK_THROWS_AS(eval_int(a, non_monotone, a.ivar("p")), AdmissibilityError);
    // The modal evaluator takes both without complaint.
    eval_modal(a, non_monotone, a.mvar("p"));
}

TEST_CASE("check dispatches by logic class and reads off membership") {
    auto arena = std::make_shared<FormulaArena>();
    KripkeModel m({"s"});
    m.add_edge(0, 0);
    m.add_val("p", 0);
    McInstance ipc{.arena = arena,
                   .formula = parse_int(*arena, "p -> p"),
                   .model = m,
                   .state = "s",
                   .logic = LogicClass::IPC,
                   .polarity = Polarity::Same};
    CHECK(check(ipc));

    McInstance s4{.arena = arena,
                  .formula = parse_modal(*arena, "<>true"),
                  .model = m,
                  .state = "s",
                  .logic = LogicClass::S4,
                  .polarity = Polarity::Same};
    CHECK(check(s4));

    // check() reports raw membership; polarity is metadata for comparisons
    // and must not flip the answer.
    McInstance flagged = ipc;
    flagged.polarity = Polarity::Complement;
    CHECK(check(flagged) == check(ipc));

    // Mismatched formula language and logic side.
    McInstance bad = ipc;
    bad.formula = parse_modal(*arena, "p");
    CHECK_THROWS_AS(check(bad), InputError);
    // Unknown state.
    McInstance missing = ipc;
    missing.state = "zz";
    CHECK_THROWS_AS(check(missing), InputError);
    // check_at evaluates at an explicit state.
    CHECK(check_at(ipc, "s"));
}

TEST_CASE("intuitionistic satisfaction is monotone on a thousand random pairs") {
    Rng rng(0x5E01);
    const std::vector<std::string> vars = {"p", "q", "r"};
    FormulaArena a;
    const LogicClass classes[] = {LogicClass::BPL, LogicClass::IPC, LogicClass::FPL};
    for (int i = 0; i < 1000; ++i) {
        const LogicClass logic = classes[i % 3];
        KripkeModel m = random_int_model(rng, logic, 8, vars);
        IntF f = random_int_formula(a, rng, 25, vars);
        SatTable table = eval_int(a, m, f);
        CHECK(monotone_table(m, table));
        CHECK(upward_closed(m, table.row(f)));
    }
}

TEST_CASE("reflexive frames agree with the include-the-point reference evaluator") {
    Rng rng(0x5E02);
    const std::vector<std::string> vars = {"p", "q"};
    FormulaArena a;
    for (int i = 0; i < 300; ++i) {
        KripkeModel m = random_int_model(rng, LogicClass::IPC, 6, vars);
        IntF f = random_int_formula(a, rng, 14, vars);
        SatTable table = eval_int(a, m, f);
        for (std::size_t s = 0; s < m.size(); ++s)
            CHECK(table.row(f)[s] == ref_eval_reflexive(a, m, f, s));
    }
}

TEST_CASE("work is bounded by tree size times squared state count") {
    Rng rng(0x5E03);
    const std::vector<std::string> vars = {"p", "q", "r"};
    for (int i = 0; i < 200; ++i) {
        FormulaArena a;
        KripkeModel m = random_int_model(rng, LogicClass::IPC, 10, vars);
        IntF f = random_int_formula(a, rng, 30, vars);
        EvalStats stats;
        eval_int(a, m, f, &stats);
        const std::uint64_t bound =
            static_cast<std::uint64_t>(tree_size(a, f)) * m.size() * m.size();
        CHECK(stats.work <= bound);
        CHECK(stats.work > 0);

        FormulaArena b;
        ModalF g = random_modal_formula(b, rng, 30);
        EvalStats mstats;
        eval_modal(b, m, g, &mstats);
        const std::uint64_t mbound =
            static_cast<std::uint64_t>(tree_size(b, g)) * m.size() * m.size();
        CHECK(mstats.work <= mbound);
    }
}

TEST_CASE("sat table row lookup fails on foreign ids") {
    FormulaArena a;
    KripkeModel m({"s"});
    m.add_edge(0, 0);
    IntF f = a.ibot();
    SatTable t = eval_int(a, m, f);
    CHECK(t.contains(f.id));
    CHECK_THROWS(t.row(std::uint32_t{9999}));
}

} // TEST_SUITE
