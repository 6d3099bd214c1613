#include "imc/difftest.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "imc/fastcheck.hpp"
#include "imc/gen.hpp"
#include "imc/io.hpp"
#include "imc/reductions.hpp"
#include "imc/rng.hpp"
#include "imc/semantics.hpp"
#include "imc/translate.hpp"

namespace imc {

namespace {

const std::vector<std::string> kAllGenerators = {"bpl0",  "fpl1", "k0",
                                                 "kc-impl", "kc2", "s42-1"};

// Substream ids; the graph stream is fixed so that disabling a generator
// never changes the instances the remaining generators see.
enum Stream : std::uint64_t {
    kGraphStream = 0,
    kPipelineStream = 1,
    kTranslateStream = 2,
    kFpl0Stream = 3,
    kPrl0Stream = 4,
};

Rng case_rng(const DiffTestConfig& config, std::uint64_t stream, std::uint64_t i) {
    return Rng(mix_seed(config.seed, stream * 0x100000000ULL + i));
}

std::string comment_block(std::string_view text) {
    std::ostringstream out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        out << "# " << text.substr(pos, nl - pos) << '\n';
        pos = nl + 1;
    }
    return out.str();
}

struct Recorder {
    DiffTestReport& report;

    void result(const std::string& suite, std::uint64_t case_id, bool pass,
                const std::function<std::string()>& bundle) {
        SuiteStats& stats = report.suites[suite];
        if (pass) {
            ++stats.pass;
            return;
        }
        ++stats.fail;
        if (!report.first_failure) {
            report.first_failure = suite + ", case " + std::to_string(case_id);
            report.failure_bundle = bundle();
        }
    }
};

std::string reduction_bundle(const std::string& suite, std::uint64_t case_id,
                             const AsAgapInstance& input, bool apath_answer,
                             bool expected, const McInstance& produced) {
    std::ostringstream out;
    out << "# suite: " << suite << ", case " << case_id << '\n';
    out << "# brute-force apath(source,target): " << (apath_answer ? "true" : "false")
        << '\n';
    out << "# expected check(): " << (expected ? "sat" : "unsat") << '\n';
    out << "# source slice graph:\n" << comment_block(write_asagap(input));
    out << write_bundle(produced);
    return out.str();
}

} // namespace

bool DiffTestReport::ok() const {
    return std::all_of(suites.begin(), suites.end(),
                       [](const auto& kv) { return kv.second.fail == 0; });
}

DiffTestReport run_difftest(const DiffTestConfig& config) {
    if (config.cases == 0) throw InputError("difftest needs at least one case");
    if (config.max_slices < 2 || config.max_slices % 2 != 0)
        throw InputError("slice bound must be even and at least 2");
    if (config.max_nodes < 1) throw InputError("node bound must be positive");
    if (config.max_formula_size < 1) throw InputError("formula size bound must be positive");

    std::set<std::string> enabled;
    if (config.generators.empty()) {
        enabled.insert(kAllGenerators.begin(), kAllGenerators.end());
    } else {
        for (const auto& name : config.generators) {
            if (std::find(kAllGenerators.begin(), kAllGenerators.end(), name) ==
                kAllGenerators.end())
                throw InputError("unknown generator: '" + name + "'");
            enabled.insert(name);
        }
    }

    DiffTestReport report;
    report.seed = config.seed;
    report.cases = config.cases;
    report.generators.assign(enabled.begin(), enabled.end());
    Recorder rec{report};

    const std::size_t model_states = 2 * config.max_nodes;

    // --- master soundness suite: reductions + companion chain --------------
    for (std::uint64_t i = 0; i < config.cases; ++i) {
        Rng rng = case_rng(config, kGraphStream, i);
        AsAgapInstance inst = random_asagap(rng, config.max_slices, config.max_nodes);
        const bool reach = apath(inst.graph, inst.source, inst.target);
        {
            AlternatingGraph flat = to_alternating(inst.graph);
            if (apath_to_literal(flat, inst.target)[inst.source] != reach)
                ++report.sink_divergences;
        }

        auto run_one = [&](const std::string& name, const McInstance& out,
                           bool also_chain) {
            const bool expected =
                out.polarity == Polarity::Same ? reach : !reach;
            bool pass = false;
            try {
                pass = check(out) == expected &&
                       validate(out.model, out.logic).admissible_for(out.logic);
            } catch (const InputError&) {
                pass = false;
            } catch (const AdmissibilityError&) {
                pass = false;
            }
            rec.result("reduction:" + name, i, pass, [&] {
                return reduction_bundle("reduction:" + name, i, inst, reach,
                                        expected, out);
            });
            if (!also_chain) return;
            McInstance chained = chain_to_modal(out);
            bool chain_pass = false;
            try {
                chain_pass = check(chained) == expected &&
                             validate(chained.model, chained.logic)
                                 .admissible_for(chained.logic);
            } catch (const InputError&) {
            } catch (const AdmissibilityError&) {
            }
            rec.result("chain:" + name, i, chain_pass, [&] {
                return reduction_bundle("chain:" + name, i, inst, reach, expected,
                                        chained);
            });
        };

        if (enabled.count("k0")) run_one("k0", to_k0(inst).instance, false);
        if (enabled.count("kc-impl"))
            run_one("kc-impl", to_kc_impl(inst).instance, true);
        if (enabled.count("fpl1")) run_one("fpl1", to_fpl1_impl(inst).instance, true);
        if (enabled.count("bpl0")) run_one("bpl0", to_bpl0(inst).instance, true);
        if (enabled.count("s42-1"))
            run_one("s42-1", to_s42_one_var(inst).instance, false);
    }

    // --- two-variable pipeline suite ----------------------------------------
    if (enabled.count("kc2")) {
        const std::vector<std::string> pool = {"x1", "x2", "x3", "x4"};
        for (std::uint64_t i = 0; i < config.cases; ++i) {
            Rng rng = case_rng(config, kPipelineStream, i);
            std::vector<std::string> vars(
                pool.begin(), pool.begin() + 1 + rng.below(pool.size()));
            KripkeModel model = random_int_model(rng, LogicClass::IPC,
                                                 config.max_nodes, vars);
            auto arena = std::make_shared<FormulaArena>();
            IntF f = random_implicational_formula(*arena, rng,
                                                  config.max_formula_size, vars);
            McInstance input{.arena = arena,
                             .formula = f,
                             .model = model,
                             .state = model.state_name(rng.below(model.size())),
                             .logic = LogicClass::IPC,
                             .polarity = Polarity::Same};
            const bool expected = check(input);
            Kc2Reduction red = ipc_to_kc2(input);
            const bool pass =
                check(red.instance) == expected &&
                validate(red.instance.model, LogicClass::KC)
                    .admissible_for(LogicClass::KC);
            rec.result("pipeline:kc2", i, pass, [&] {
                std::ostringstream out;
                out << "# suite: pipeline:kc2, case " << i << '\n';
                out << "# expected check(): " << (expected ? "sat" : "unsat") << '\n';
                out << "# source instance:\n" << comment_block(write_bundle(input));
                out << write_bundle(red.instance);
                return out.str();
            });
        }
    }

    // --- translation preservation suite -------------------------------------
    {
        const std::vector<std::string> vars = {"p", "q", "r"};
        const LogicClass classes[] = {LogicClass::BPL, LogicClass::IPC,
                                      LogicClass::FPL};
        for (std::uint64_t i = 0; i < config.cases; ++i) {
            Rng rng = case_rng(config, kTranslateStream, i);
            const LogicClass logic = classes[rng.below(3)];
            KripkeModel model = random_int_model(rng, logic, model_states, vars);
            FormulaArena arena;
            IntF f = random_int_formula(arena, rng, config.max_formula_size, vars);
            ModalF g = gt_prime(arena, f);
            SatTable int_table = eval_int(arena, model, f);
            SatTable modal_table = eval_modal(arena, model, g);
            const bool pass = int_table.row(f) == modal_table.row(g);
            rec.result("translate:gtp", i, pass, [&] {
                const Bits& iv = int_table.row(f);
                const Bits& mv = modal_table.row(g);
                std::size_t s = 0;
                while (s < model.size() && iv[s] == mv[s]) ++s;
                std::ostringstream out;
                out << "# suite: translate:gtp, case " << i << '\n';
                out << "# divergence at state " << model.state_name(s)
                    << ": intuitionistic " << (iv[s] ? "sat" : "unsat") << ", modal "
                    << (mv[s] ? "sat" : "unsat") << '\n';
                McInstance witness{.arena = std::make_shared<FormulaArena>(),
                                   .formula = IntF{0},
                                   .model = model,
                                   .state = model.state_name(s),
                                   .logic = logic,
                                   .polarity = Polarity::Same};
                witness.formula = parse_int(*witness.arena, render(arena, f));
                out << write_bundle(witness);
                return out.str();
            });
        }
    }

    // --- fast-vs-naive suites ------------------------------------------------
    for (std::uint64_t i = 0; i < config.cases; ++i) {
        Rng rng = case_rng(config, kFpl0Stream, i);
        KripkeModel model = random_int_model(rng, LogicClass::FPL, model_states, {});
        FormulaArena arena;
        IntF f = random_int_formula(arena, rng, config.max_formula_size, {});
        const std::size_t s = rng.below(model.size());
        const bool naive = eval_int(arena, model, f).row(f)[s];
        const bool fast = check_fpl0(arena, model, f, model.state_name(s));
        rec.result("fast:fpl0", i, naive == fast, [&] {
            std::ostringstream out;
            out << "# suite: fast:fpl0, case " << i << '\n';
            out << "# naive: " << (naive ? "sat" : "unsat") << ", fast: "
                << (fast ? "sat" : "unsat") << '\n';
            McInstance witness{.arena = std::make_shared<FormulaArena>(),
                               .formula = IntF{0},
                               .model = model,
                               .state = model.state_name(s),
                               .logic = LogicClass::FPL,
                               .polarity = Polarity::Same};
            witness.formula = parse_int(*witness.arena, render(arena, f));
            return out.str() + write_bundle(witness);
        });
    }
    for (std::uint64_t i = 0; i < config.cases; ++i) {
        Rng rng = case_rng(config, kPrl0Stream, i);
        KripkeModel model = random_strict_order_model(rng, model_states, {});
        FormulaArena arena;
        ModalF f = random_modal_formula(arena, rng, config.max_formula_size);
        const std::size_t s = rng.below(model.size());
        const bool naive = eval_modal(arena, model, f).row(f)[s];
        const bool fast = check_prl0(arena, model, f, model.state_name(s));
        rec.result("fast:prl0", i, naive == fast, [&] {
            std::ostringstream out;
            out << "# suite: fast:prl0, case " << i << '\n';
            out << "# naive: " << (naive ? "sat" : "unsat") << ", fast: "
                << (fast ? "sat" : "unsat") << '\n';
            McInstance witness{.arena = std::make_shared<FormulaArena>(),
                               .formula = IntF{0},
                               .model = model,
                               .state = model.state_name(s),
                               .logic = LogicClass::PrL,
                               .polarity = Polarity::Same};
            witness.formula = parse_modal(*witness.arena, render(arena, f));
            return out.str() + write_bundle(witness);
        });
    }

    return report;
}

std::string render_text(const DiffTestReport& report) {
    std::ostringstream out;
    out << "seed: " << report.seed << '\n';
    out << "cases: " << report.cases << '\n';
    out << "generators:";
    for (const auto& g : report.generators) out << ' ' << g;
    out << '\n';
    for (const auto& [suite, stats] : report.suites)
        out << "suite " << suite << ": pass " << stats.pass << " fail " << stats.fail
            << '\n';
    out << "sink divergences: " << report.sink_divergences << '\n';
    out << "first failure: " << report.first_failure.value_or("none") << '\n';
    out << "result: " << (report.ok() ? "ok" : "FAIL") << '\n';
    return out.str();
}

std::string render_jsonl(const DiffTestReport& report) {
    std::ostringstream out;
    for (const auto& [suite, stats] : report.suites) {
        nlohmann::json line = {
            {"suite", suite}, {"pass", stats.pass}, {"fail", stats.fail}};
        out << line.dump() << '\n';
    }
    nlohmann::json summary = {{"summary", true},
                              {"seed", report.seed},
                              {"cases", report.cases},
                              {"generators", report.generators},
                              {"sink_divergences", report.sink_divergences},
                              {"ok", report.ok()}};
    if (report.first_failure)
        summary["first_failure"] = *report.first_failure;
    else
        summary["first_failure"] = nullptr;
    if (report.failure_bundle)
        summary["failure_bundle"] = *report.failure_bundle;
    else
        summary["failure_bundle"] = nullptr;
    out << summary.dump() << '\n';
    return out.str();
}

} // namespace imc
