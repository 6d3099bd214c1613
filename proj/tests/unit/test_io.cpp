#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "imc/agap.hpp"
#include "imc/formula.hpp"
#include "imc/gen.hpp"
#include "imc/io.hpp"
#include "imc/kripke.hpp"
#include "imc/rng.hpp"
#include "imc/semantics.hpp"

using namespace imc;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(IMC_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("model text round trip") {
    const std::string text =
        "# comment lines and blank lines are ignored\n"
        "\n"
        "states: s0 s1 top\n"
        "edge: s0 s1\n"
        "edge: s1 top\n"
        "val p: s1 top\n"
        "val p: s0\n" // val lines accumulate
        "val q: top\n";
    KripkeModel m = parse_model(text);
    REQUIRE(m.states() == std::vector<std::string>{"s0", "s1", "top"});
    CHECK(m.has_edge(0, 1));
    CHECK(m.has_edge(1, 2));
    CHECK_FALSE(m.has_edge(0, 2));
    CHECK(m.val_row("p").count() == 3);
    CHECK(m.val_row("q").count() == 1);
    CHECK(m.val_row("unknown").none());
    CHECK(m.val_row("unknown").size() == 3);

    const std::string canonical = write_model(m);
    CHECK(write_model(parse_model(canonical)) == canonical);
}

TEST_CASE("model text admits synthesized state names") {
    KripkeModel m = parse_model("states: a_1^1 v@2\nedge: a_1^1 v@2\n");
    CHECK(m.size() == 2);
    CHECK(m.has_edge(0, 1));
    CHECK(write_model(parse_model(write_model(m))) == write_model(m));
}

TEST_CASE("model text rejections") {
    CHECK_THROWS_WITH_AS(parse_model("states: a\nstates: b\n"),
                         "duplicate states line", InputError);
    CHECK_THROWS_WITH_AS(parse_model("states: a b\nedge: a\n"),
                         "edge line needs exactly two states: 'edge: a'", InputError);
    CHECK_THROWS_WITH_AS(parse_model("states: a\nval P: a\n"),
                         "invalid variable name: 'P'", InputError);
    CHECK_THROWS_WITH_AS(parse_model("states: a\nfrontier: a\n"),
                         "unknown model line: 'frontier: a'", InputError);
    CHECK_THROWS_WITH_AS(parse_model("edge: a b\n"), "model needs a states line",
                         InputError);
    CHECK_THROWS_WITH_AS(parse_model("states: a\njust words\n"),
                         "malformed model line: 'just words'", InputError);
    // Unknown endpoint names surface through the index lookup.
    CHECK_THROWS_AS(parse_model("states: a\nedge: a zz\n"), InputError);
}

TEST_CASE("slice graph fixtures parse to the expected instances") {
    AsAgapInstance g0 = parse_asagap(slurp("g0.asagap"));
    CHECK(g0.graph.num_slices() == 2);
    CHECK(g0.graph.size() == 3);
    CHECK(g0.graph.name(g0.source) == "s");
    CHECK(g0.graph.name(g0.target) == "t");
    CHECK(validate_slice_graph(g0.graph).valid);
    CHECK(apath(g0.graph, g0.source, g0.target));

    AsAgapInstance g2 = parse_asagap(slurp("g2.asagap"));
    CHECK_FALSE(apath(g2.graph, g2.source, g2.target));

    const std::string canonical = write_asagap(g0);
    CHECK(write_asagap(parse_asagap(canonical)) == canonical);
}

TEST_CASE("slice graph text rejections") {
    CHECK_THROWS_WITH_AS(
        parse_asagap("slice 1: a@1\nslice 2: t\nedge: a@1 t\nsource: a@1\ntarget: t\n"),
        "node name 'a@1' is not a plain identifier ('@'/'^' are reserved)",
        InputError);
    CHECK_THROWS_WITH_AS(parse_asagap("slice one: a\n"),
                         "malformed slice index: 'slice one: a'", InputError);
    CHECK_THROWS_WITH_AS(parse_asagap("slice 1: s\nslice 2: t\nedge: s t\nsource: s\n"),
                         "graph instance needs source and target lines", InputError);
    CHECK_THROWS_WITH_AS(
        parse_asagap(
            "slice 1: s\nslice 2: t\nedge: s t\nsource: s\nsource: t\ntarget: t\n"),
        "duplicate source line", InputError);
    CHECK_THROWS_WITH_AS(
        parse_asagap("slice 1: s\nslice 2: t\nedge: s\nsource: s\ntarget: t\n"),
        "edge line needs exactly two nodes: 'edge: s'", InputError);
    CHECK_THROWS_WITH_AS(parse_asagap("flavor: mild\n"),
                         "unknown graph line: 'flavor: mild'", InputError);
}

TEST_CASE("alternating graph text round trip") {
    AgapInstance inst = parse_agap(slurp("agap_general.agap"));
    CHECK(inst.graph.size() == 3);
    CHECK(inst.graph.kind(inst.graph.require_index("s")) == NodeKind::Existential);
    CHECK(inst.graph.kind(inst.graph.require_index("x")) == NodeKind::Universal);
    CHECK(apath(inst.graph, inst.source, inst.target));

    const std::string canonical = write_agap(inst);
    CHECK(write_agap(parse_agap(canonical)) == canonical);

    CHECK_THROWS_WITH_AS(
        parse_agap("exists: s^1\nforall: t\nedge: s^1 t\nsource: s^1\ntarget: t\n"),
        "node name 's^1' is not a plain identifier ('@'/'^' are reserved)",
        InputError);
}

TEST_CASE("bundle fixture describes a satisfiable identity implication") {
    McInstance inst = parse_bundle(slurp("ipc_p_impl_p.bundle"));
    CHECK(inst.logic == LogicClass::IPC);
    CHECK(inst.polarity == Polarity::Same);
    CHECK(inst.state == "s");
    CHECK_FALSE(inst.is_modal());
    CHECK(render(*inst.arena, inst.int_formula()) == "p -> p");
    CHECK(check(inst));

    const std::string canonical = write_bundle(inst);
    CHECK(write_bundle(parse_bundle(canonical)) == canonical);
}

TEST_CASE("bundle headers come in any order and support modal logics") {
    const std::string text =
        "states: w v\n"
        "edge: w v\n"
        "formula: [](p -> q)\n"
        "polarity: complement\n"
        "val p: v\n"
        "state: w\n"
        "logic: K\n";
    McInstance inst = parse_bundle(text);
    CHECK(inst.logic == LogicClass::K);
    CHECK(inst.polarity == Polarity::Complement);
    CHECK(inst.is_modal());
    CHECK(render(*inst.arena, inst.modal_formula()) == "[](p -> q)");
    CHECK(inst.model.size() == 2);
    // Complement polarity survives a round trip.
    McInstance again = parse_bundle(write_bundle(inst));
    CHECK(again.polarity == Polarity::Complement);
    CHECK(write_bundle(again) == write_bundle(inst));
}

TEST_CASE("bundle text rejections") {
    CHECK_THROWS_WITH_AS(parse_bundle("logic: IPC\nstate: s\npolarity: same\n"
                                      "states: s\n"),
                         "bundle needs logic, state, polarity and formula lines",
                         InputError);
    CHECK_THROWS_WITH_AS(parse_bundle("logic: IPC\nlogic: K\nstate: s\n"
                                      "polarity: same\nformula: p\nstates: s\n"),
                         "duplicate logic line", InputError);
    CHECK_THROWS_WITH_AS(parse_bundle("logic: linear\nstate: s\npolarity: same\n"
                                      "formula: p\nstates: s\n"),
                         "unknown logic: 'linear'", InputError);
    CHECK_THROWS_WITH_AS(parse_bundle("logic: IPC\nstate: s\npolarity: maybe\n"
                                      "formula: p\nstates: s\n"),
                         "unknown polarity: 'maybe'", InputError);
    // The distinguished state must exist in the model.
    CHECK_THROWS_AS(parse_bundle("logic: IPC\nstate: zz\npolarity: same\n"
                                 "formula: p\nstates: s\n"),
                    InputError);
    // Formula text is parsed on the logic's side of the syntax.
    CHECK_THROWS_AS(parse_bundle("logic: IPC\nstate: s\npolarity: same\n"
                                 "formula: []p\nstates: s\n"),
                    ParseError);
}

TEST_CASE("random values survive write and parse") {
    Rng rng(0x10AD);
    const std::vector<std::string> vars = {"p", "q"};
    for (int i = 0; i < 120; ++i) {
        // Kripke models: bitwise identical states, edges and valuation.
        KripkeModel m = random_int_model(rng, LogicClass::IPC, 7, vars);
        KripkeModel m2 = parse_model(write_model(m));
        CHECK(m2.states() == m.states());
        CHECK(m2.relation() == m.relation());
        for (const auto& v : vars) CHECK(m2.val_row(v) == m.val_row(v));

        // Slice instances: same structure and the same alternating answer.
        AsAgapInstance g = random_asagap(rng, 6, 3);
        AsAgapInstance g2 = parse_asagap(write_asagap(g));
        CHECK(g2.graph.num_slices() == g.graph.num_slices());
        CHECK(g2.graph.size() == g.graph.size());
        CHECK(g2.source == g.source);
        CHECK(g2.target == g.target);
        CHECK(apath(g2.graph, g2.source, g2.target) ==
              apath(g.graph, g.source, g.target));

        // General alternating instances. The writer lists existential nodes
        // before universal ones, so node indices may shift; the named graph
        // and the answer are what must survive.
        AgapInstance ag = random_agap(rng, 6);
        AgapInstance ag2 = parse_agap(write_agap(ag));
        REQUIRE(ag2.graph.size() == ag.graph.size());
        for (std::size_t v = 0; v < ag.graph.size(); ++v) {
            const auto w = ag2.graph.index_of(ag.graph.name(v));
            REQUIRE(w.has_value());
            CHECK(ag2.graph.kind(*w) == ag.graph.kind(v));
            std::set<std::string> orig, round;
            for (std::size_t u : ag.graph.successors(v))
                orig.insert(ag.graph.name(u));
            for (std::size_t u : ag2.graph.successors(*w))
                round.insert(ag2.graph.name(u));
            CHECK(round == orig);
        }
        CHECK(ag2.graph.name(ag2.source) == ag.graph.name(ag.source));
        CHECK(ag2.graph.name(ag2.target) == ag.graph.name(ag.target));
        CHECK(apath(ag2.graph, ag2.source, ag2.target) ==
              apath(ag.graph, ag.source, ag.target));
    }
}

TEST_CASE("random bundles survive write and parse") {
    Rng rng(0x10AE);
    const std::vector<std::string> vars = {"p", "q"};
    for (int i = 0; i < 60; ++i) {
        auto arena = std::make_shared<FormulaArena>();
        KripkeModel m = random_int_model(rng, LogicClass::IPC, 6, vars);
        const bool modal = i % 2 == 0;
        McInstance inst{
            .arena = arena,
            .formula = modal ? std::variant<IntF, ModalF>(random_modal_formula(*arena, rng, 14))
                             : std::variant<IntF, ModalF>(random_int_formula(*arena, rng, 14, vars)),
            .model = m,
            .state = m.state_name(rng.below(m.size())),
            .logic = modal ? LogicClass::K : LogicClass::IPC,
            .polarity = rng.coin() ? Polarity::Same : Polarity::Complement};
        const std::string text = write_bundle(inst);
        McInstance back = parse_bundle(text);
        CHECK(back.logic == inst.logic);
        CHECK(back.state == inst.state);
        CHECK(back.polarity == inst.polarity);
        CHECK(write_bundle(back) == text);
        CHECK(check(back) == check(inst));
    }
}

} // TEST_SUITE
