#include <doctest.h>

#include <set>
#include <string>

#include "imc/formula.hpp"
#include "imc/gen.hpp"
#include "imc/rng.hpp"

using namespace imc;

TEST_SUITE("formula") {

TEST_CASE("hash-consing gives structural identity") {
    FormulaArena a;
    CHECK(a.ivar("p").id == a.ivar("p").id);
    CHECK(a.ivar("p").id != a.ivar("q").id);
    IntF f = a.iand(a.ivar("p"), a.ibot());
    IntF g = a.iand(a.ivar("p"), a.ibot());
    CHECK(f == g);
    CHECK(a.mbox(a.mvar("p")) == a.mbox(a.mvar("p")));
}

TEST_CASE("variable name validation") {
    CHECK(valid_var_name("p"));
    CHECK(valid_var_name("p_1"));
    CHECK(valid_var_name("abc0_9z"));
    CHECK_FALSE(valid_var_name(""));
    CHECK_FALSE(valid_var_name("P"));
    CHECK_FALSE(valid_var_name("1p"));
    CHECK_FALSE(valid_var_name("p-1"));
    CHECK_FALSE(valid_var_name("a^1"));
    FormulaArena a;
    CHECK_THROWS_AS(a.ivar("Bad"), InputError);
}

TEST_CASE("parse_int literals and sugar") {
    FormulaArena a;
    CHECK(parse_int(a, "false") == a.ibot());
    CHECK(parse_int(a, "true") == a.itop());
    CHECK(parse_int(a, "~p") == a.iimpl(a.ivar("p"), a.ibot()));
    CHECK(parse_int(a, "~p") == a.ineg(a.ivar("p")));
}

TEST_CASE("parse_int precedence and associativity") {
    FormulaArena a;
    IntF p = a.ivar("p"), q = a.ivar("q"), r = a.ivar("r");
    // -> is right-associative and loosest.
    CHECK(parse_int(a, "p -> q -> r") == a.iimpl(p, a.iimpl(q, r)));
    // & binds tighter than |, which binds tighter than ->.
    CHECK(parse_int(a, "p & q | r") == a.ior(a.iand(p, q), r));
    CHECK(parse_int(a, "p | q & r") == a.ior(p, a.iand(q, r)));
    CHECK(parse_int(a, "p | q -> r") == a.iimpl(a.ior(p, q), r));
    // & and | are left-associative.
    CHECK(parse_int(a, "p & q & r") == a.iand(a.iand(p, q), r));
    CHECK(parse_int(a, "p | q | r") == a.ior(a.ior(p, q), r));
    // ~ binds tightest.
    CHECK(parse_int(a, "~p & q") == a.iand(a.ineg(p), q));
    CHECK(parse_int(a, "(p -> q) -> r") == a.iimpl(a.iimpl(p, q), r));
}

TEST_CASE("parse_modal prefixes and sugar expansion") {
    FormulaArena a;
    ModalF p = a.mvar("p"), q = a.mvar("q");
    CHECK(parse_modal(a, "[]false") == a.mbox(a.mbot()));
    CHECK(parse_modal(a, "<>p") == a.mdia(p));
    CHECK(parse_modal(a, "<>p") == a.mneg(a.mbox(a.mneg(p))));
    CHECK(parse_modal(a, "p & q") == a.mand(p, q));
    CHECK(parse_modal(a, "p & q") == a.mneg(a.mimpl(p, a.mneg(q))));
    CHECK(parse_modal(a, "p | q") == a.mimpl(a.mneg(p), q));
    CHECK(parse_modal(a, "true") == a.mtop());
    CHECK(parse_modal(a, "[](p -> q)") == a.mbox(a.mimpl(p, q)));
    CHECK(parse_modal(a, "[][]p") == a.mbox(a.mbox(p)));
}

TEST_CASE("parse errors carry 1-based positions") {
    FormulaArena a;
    auto pos_of = [&](auto parse, const char* text) -> std::size_t {
        try {
            parse(a, text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return 0; // no throw: fail below
    };
    CHECK(pos_of(parse_int, "") == 1);
    CHECK(pos_of(parse_int, "p ->") == 5);
    CHECK(pos_of(parse_int, "(p") == 3);
    CHECK(pos_of(parse_int, "p q") == 3);
    CHECK(pos_of(parse_int, "p)") == 2);
    CHECK(pos_of(parse_int, "?") == 1);
    CHECK_THROWS_AS(parse_int(a, "[]p"), ParseError);
    CHECK(pos_of(parse_int, "[]p") == 1);
    CHECK(pos_of(parse_int, "p -> <>q") == 6);
    CHECK(pos_of(parse_modal, "[p") == 1);
    CHECK(pos_of(parse_modal, "<q") == 1);
    CHECK(pos_of(parse_modal, "p - q") == 3);
    // ParseError is an InputError; the message names the position.
    try {
        parse_int(a, "p q");
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("position 3") != std::string::npos);
    }
}

TEST_CASE("render examples") {
    FormulaArena a;
    CHECK(render(a, a.ibot()) == "false");
    CHECK(render(a, a.ineg(a.ivar("p"))) == "p -> false");
    CHECK(render(a, parse_int(a, "p -> q -> r")) == "p -> q -> r");
    CHECK(render(a, parse_int(a, "(p -> q) -> r")) == "(p -> q) -> r");
    CHECK(render(a, parse_int(a, "p & q | r")) == "p & q | r");
    CHECK(render(a, parse_int(a, "(p | q) & r")) == "(p | q) & r");
    CHECK(render(a, a.mbox(a.mimpl(a.mvar("p"), a.mvar("q")))) == "[](p -> q)");
}

TEST_CASE("render round-trip over ten thousand random formulas") {
    FormulaArena a;
    Rng rng(0xF0F01);
    const std::vector<std::string> vars = {"p", "q", "r", "s_1"};
    for (int i = 0; i < 10000; ++i) {
        IntF f = random_int_formula(a, rng, 50, vars);
        CHECK(parse_int(a, render(a, f)) == f);
    }
    for (int i = 0; i < 10000; ++i) {
        ModalF f = random_modal_formula(a, rng, 50);
        CHECK(parse_modal(a, render(a, f)) == f);
    }
}

TEST_CASE("sugar renders re-parse to the expanded trees") {
    FormulaArena a;
    ModalF p = a.mvar("p"), q = a.mvar("q");
    for (ModalF f : {a.mneg(p), a.mtop(), a.mand(p, q), a.mor(p, q), a.mdia(p),
                     a.mdia(a.mand(p, a.mneg(q)))})
        CHECK(parse_modal(a, render(a, f)) == f);
    IntF ip = a.ivar("p");
    for (IntF f : {a.ineg(ip), a.itop(), a.ineg(a.ineg(ip))})
        CHECK(parse_int(a, render(a, f)) == f);
}

TEST_CASE("analyze counts variables and recognizes fragments") {
    FormulaArena a;
    IntF f = parse_int(a, "(p -> q) -> p");
    FragmentReport r = analyze(a, f);
    CHECK(r.variable_count == 2);
    CHECK(r.variable_set == std::set<std::string>{"p", "q"});
    CHECK(r.implicational);
    CHECK(r.size == 5);

    CHECK(analyze(a, parse_int(a, "p & q")).implicational == false);
    CHECK(analyze(a, parse_int(a, "p | q")).implicational == false);
    // Bot is permitted in the implicational fragment.
    CHECK(analyze(a, parse_int(a, "p -> false")).implicational);
    CHECK(analyze(a, a.ibot()).variable_count == 0);
}

TEST_CASE("analyze strictly implicational recognizer") {
    FormulaArena a;
    CHECK(analyze(a, a.mbox(a.mimpl(a.mbot(), a.mbot()))).strictly_implicational);
    CHECK_FALSE(analyze(a, a.mbox(a.mbox(a.mbot()))).strictly_implicational);
    CHECK(analyze(a, a.mbot()).strictly_implicational);
    CHECK(analyze(a, a.mvar("p")).strictly_implicational);
    // A bare implication is not strictly implicational; it must sit under a box.
    CHECK_FALSE(analyze(a, a.mimpl(a.mvar("p"), a.mvar("q"))).strictly_implicational);
    CHECK(analyze(a, a.mbox(a.mimpl(a.mvar("p"),
                                    a.mbox(a.mimpl(a.mvar("q"), a.mbot())))))
              .strictly_implicational);
    // Modal conjunction sugar expands to a non-strict shape.
    CHECK_FALSE(analyze(a, a.mand(a.mvar("p"), a.mbox(a.mvar("p"))))
                    .strictly_implicational);
}

TEST_CASE("analyze variable count equals reachable name set on random input") {
    FormulaArena a;
    Rng rng(0xF0F02);
    const std::vector<std::string> vars = {"p", "q", "r", "s", "t_2"};
    for (int i = 0; i < 300; ++i) {
        IntF f = random_int_formula(a, rng, 40, vars);
        FragmentReport r = analyze(a, f);
        CHECK(r.variable_count == r.variable_set.size());
        // Recount by a direct walk.
        std::set<std::string> seen;
        auto walk = [&](auto&& self, IntF g) -> void {
            switch (a.op(g)) {
                case IntOp::Bot: return;
                case IntOp::Var: seen.insert(a.name(g)); return;
                default:
                    self(self, a.left(g));
                    self(self, a.right(g));
            }
        };
        walk(walk, f);
        CHECK(seen == r.variable_set);
    }
}

} // TEST_SUITE
