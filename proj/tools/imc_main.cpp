// imc — model checking for intuitionistic logics and their modal companions.
//
// Exit codes: 0 sat/success, 1 unsat (or difftest failures), 2 usage or input
// error, 3 admissibility violation. Results go to stdout, diagnostics to
// stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "imc/difftest.hpp"
#include "imc/fastcheck.hpp"
#include "imc/io.hpp"
#include "imc/reductions.hpp"
#include "imc/semantics.hpp"
#include "imc/translate.hpp"

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitInput = 2;
constexpr int kExitAdmissibility = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw imc::InputError("cannot open file: '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw imc::InputError("cannot open file for writing: '" + path + "'");
    out << text;
}

// The two graph-instance formats are distinguished by their node-section
// keyword ("slice N:" vs "exists:"/"forall:").
bool looks_sliced(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream words(line);
        std::string first;
        if (!(words >> first)) continue;
        if (first == "slice") return true;
        if (first == "exists:" || first == "forall:") return false;
    }
    return true;
}

bool fast_check(const imc::McInstance& inst, const std::string& state) {
    using namespace imc;
    if (inst.logic == LogicClass::FPL) {
        return check_fpl0(*inst.arena, inst.model, inst.int_formula(), state);
    }
    if (inst.logic == LogicClass::PrL) {
        return check_prl0(*inst.arena, inst.model, inst.modal_formula(), state);
    }
    throw InputError("--fast supports variable-free FPL and PrL instances only");
}

int run(int argc, char** argv) {
    using namespace imc;

    CLI::App app{"Model checking for intuitionistic logics (BPL, IPC, KC, FPL) "
                 "and their modal companions (K, K4, S4, S4.2, PrL)"};
    app.require_subcommand(1);

    // --- check ---------------------------------------------------------------
    auto* check_cmd = app.add_subcommand("check", "Evaluate an instance bundle");
    std::string check_file;
    std::string check_state;
    bool check_fast = false;
    check_cmd->add_option("bundle", check_file, "Instance bundle file ('-' for stdin)")
        ->required();
    check_cmd->add_option("--state", check_state, "Evaluate at this state instead");
    check_cmd->add_flag("--fast", check_fast,
                        "Use the index/longest-path checkers (variable-free FPL/PrL)");

    // --- validate ------------------------------------------------------------
    auto* validate_cmd =
        app.add_subcommand("validate", "Check a model against a logic's frame class");
    std::string validate_file, validate_logic;
    validate_cmd->add_option("model", validate_file, "Model file ('-' for stdin)")
        ->required();
    validate_cmd->add_option("--logic", validate_logic, "Logic class")->required();

    // --- translate -----------------------------------------------------------
    auto* translate_cmd =
        app.add_subcommand("translate", "Apply a modal translation to a formula");
    std::string translate_formula, translate_mode = "gtp";
    translate_cmd->add_option("formula", translate_formula, "Intuitionistic formula")
        ->required();
    translate_cmd->add_option("--mode", translate_mode, "gt or gtp (default gtp)")
        ->check(CLI::IsMember({"gt", "gtp"}));

    // --- agap ----------------------------------------------------------------
    auto* agap_cmd = app.add_subcommand("agap", "Alternating-graph reachability");
    agap_cmd->require_subcommand(1);
    auto* agap_eval = agap_cmd->add_subcommand("eval", "Decide apath(source, target)");
    std::string agap_eval_file;
    agap_eval->add_option("instance", agap_eval_file, "Graph instance file")->required();
    auto* agap_pad =
        agap_cmd->add_subcommand("pad", "Pad a general instance into slice form");
    std::string agap_pad_file;
    agap_pad->add_option("instance", agap_pad_file, "General instance file")->required();
    auto* agap_validate =
        agap_cmd->add_subcommand("validate", "Validate a slice-graph instance");
    std::string agap_validate_file;
    agap_validate->add_option("instance", agap_validate_file, "Slice instance file")
        ->required();

    // --- reduce ----------------------------------------------------------------
    auto* reduce_cmd =
        app.add_subcommand("reduce", "Compile a source instance into a bundle");
    std::string reduce_file, reduce_target, reduce_out;
    bool reduce_chain = false;
    reduce_cmd->add_option("instance", reduce_file,
                           "Slice instance file (or bundle for kc2)")
        ->required();
    reduce_cmd->add_option("--target", reduce_target, "Reduction to apply")
        ->required()
        ->check(CLI::IsMember({"k0", "kc-impl", "fpl1", "bpl0", "s42-1", "kc2"}));
    reduce_cmd->add_flag("--chain-modal", reduce_chain,
                         "Translate the result to its modal companion");
    reduce_cmd->add_option("-o,--output", reduce_out, "Output file (default stdout)");

    // --- index / lp ------------------------------------------------------------
    auto* index_cmd =
        app.add_subcommand("index", "Equivalence-class index of a variable-free formula");
    std::string index_formula;
    index_cmd->add_option("formula", index_formula, "Variable-free formula")->required();

    auto* lp_cmd = app.add_subcommand("lp", "Longest-path length from a state");
    std::string lp_file, lp_state;
    lp_cmd->add_option("model", lp_file, "Model file ('-' for stdin)")->required();
    lp_cmd->add_option("--state", lp_state, "Start state")->required();

    // --- difftest ----------------------------------------------------------------
    auto* diff_cmd =
        app.add_subcommand("difftest", "Differential testing of all components");
    DiffTestConfig cfg;
    std::string diff_format = "text", diff_bundle_out;
    std::vector<std::string> diff_generators;
    diff_cmd->add_option("--seed", cfg.seed, "Random seed (default 1)");
    diff_cmd->add_option("--cases", cfg.cases, "Cases per suite (default 100)");
    diff_cmd->add_option("--max-nodes", cfg.max_nodes, "Nodes per slice bound");
    diff_cmd->add_option("--max-slices", cfg.max_slices, "Slice count bound (even)");
    diff_cmd->add_option("--max-formula-size", cfg.max_formula_size,
                         "Formula size bound");
    diff_cmd->add_option("--generators", diff_generators,
                         "Comma-separated reduction subset")
        ->delimiter(',');
    diff_cmd->add_option("--format", diff_format, "text or jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));
    diff_cmd->add_option("--bundle-out", diff_bundle_out,
                         "Write the first failing case's bundle here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints help or the usage error
        return code == 0 ? kExitSat : kExitInput;
    }

    if (check_cmd->parsed()) {
        McInstance inst = parse_bundle(read_input(check_file));
        const std::string at = check_state.empty() ? inst.state : check_state;
        const bool sat = check_fast ? fast_check(inst, at) : check_at(inst, at);
        std::cout << (sat ? "sat" : "unsat") << '\n';
        return sat ? kExitSat : kExitUnsat;
    }

    if (validate_cmd->parsed()) {
        auto logic = logic_from_string(validate_logic);
        if (!logic) throw InputError("unknown logic: '" + validate_logic + "'");
        KripkeModel model = parse_model(read_input(validate_file));
        FrameReport report = validate(model, *logic);
        if (report.admissible_for(*logic)) {
            std::cout << "admissible\n";
            return kExitSat;
        }
        std::cout << report.violation_message(*logic) << '\n';
        return kExitAdmissibility;
    }

    if (translate_cmd->parsed()) {
        FormulaArena arena;
        IntF f = parse_int(arena, translate_formula);
        ModalF g = translate_mode == "gt" ? gt(arena, f) : gt_prime(arena, f);
        std::cout << render(arena, g) << '\n';
        return kExitSat;
    }

    if (agap_eval->parsed()) {
        const std::string text = read_input(agap_eval_file);
        bool reach;
        if (looks_sliced(text)) {
            AsAgapInstance inst = parse_asagap(text);
            require_valid(inst);
            reach = apath(inst.graph, inst.source, inst.target);
        } else {
            AgapInstance inst = parse_agap(text);
            reach = apath(inst.graph, inst.source, inst.target);
        }
        std::cout << (reach ? "reachable" : "unreachable") << '\n';
        return reach ? kExitSat : kExitUnsat;
    }
    if (agap_pad->parsed()) {
        AgapInstance inst = parse_agap(read_input(agap_pad_file));
        std::cout << write_asagap(agap_to_asagap(inst));
        return kExitSat;
    }
    if (agap_validate->parsed()) {
        AsAgapInstance inst = parse_asagap(read_input(agap_validate_file));
        SliceGraphReport report = validate_slice_graph(inst.graph);
        if (!report.valid) {
            std::cout << report.first_violation << '\n';
            return kExitInput;
        }
        try {
            require_valid(inst);
        } catch (const InputError& e) {
            std::cout << e.what() << '\n';
            return kExitInput;
        }
        std::cout << "valid\n";
        return kExitSat;
    }

    if (reduce_cmd->parsed()) {
        McInstance out = [&]() -> McInstance {
            if (reduce_target == "kc2")
                return ipc_to_kc2(parse_bundle(read_input(reduce_file))).instance;
            AsAgapInstance inst = parse_asagap(read_input(reduce_file));
            if (reduce_target == "k0") return to_k0(inst).instance;
            if (reduce_target == "kc-impl") return to_kc_impl(inst).instance;
            if (reduce_target == "fpl1") return to_fpl1_impl(inst).instance;
            if (reduce_target == "bpl0") return to_bpl0(inst).instance;
            return to_s42_one_var(inst).instance;
        }();
        if (reduce_chain) out = chain_to_modal(out);
        write_output(reduce_out, write_bundle(out));
        return kExitSat;
    }

    if (index_cmd->parsed()) {
        FormulaArena arena;
        IntF f = parse_int(arena, index_formula);
        std::cout << formula_index(arena, f).to_string() << '\n';
        return kExitSat;
    }

    if (lp_cmd->parsed()) {
        KripkeModel model = parse_model(read_input(lp_file));
        std::cout << lp(model, model.require_index(lp_state)) << '\n';
        return kExitSat;
    }

    if (diff_cmd->parsed()) {
        cfg.generators = diff_generators;
        DiffTestReport report = run_difftest(cfg);
        std::cout << (diff_format == "jsonl" ? render_jsonl(report)
                                             : render_text(report));
        if (!diff_bundle_out.empty() && report.failure_bundle)
            write_output(diff_bundle_out, *report.failure_bundle);
        return report.ok() ? kExitSat : kExitUnsat;
    }

    return kExitInput; // unreachable: a subcommand is required
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const imc::AdmissibilityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAdmissibility;
    } catch (const imc::CycleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAdmissibility;
    } catch (const imc::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
