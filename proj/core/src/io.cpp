#include "imc/io.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>
#include <vector>

namespace imc {

namespace {

// Strips the comment tail and surrounding whitespace.
std::string_view clean(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t' ||
                             line.front() == '\r'))
        line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r'))
        line.remove_suffix(1);
    return line;
}

std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> words;
    std::istringstream in{std::string(text)};
    std::string word;
    while (in >> word) words.push_back(word);
    return words;
}

// "key: payload" split; returns false when the line has no colon.
bool split_header(std::string_view line, std::string& key, std::string& payload) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos) return false;
    key = std::string(clean(line.substr(0, colon)));
    payload = std::string(clean(line.substr(colon + 1)));
    return true;
}

std::vector<std::string> nonempty_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = clean(text.substr(pos, nl - pos));
        if (!line.empty()) lines.emplace_back(line);
        pos = nl + 1;
    }
    return lines;
}

bool plain_identifier(std::string_view name) {
    return valid_state_name(name) && name.find('@') == std::string_view::npos &&
           name.find('^') == std::string_view::npos;
}

} // namespace

// --------------------------------------------------------------------------
// Kripke model text
// --------------------------------------------------------------------------

KripkeModel parse_model(std::string_view text) {
    std::vector<std::string> states;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::pair<std::string, std::vector<std::string>>> vals;
    bool have_states = false;

    for (const std::string& line : nonempty_lines(text)) {
        std::string key, payload;
        if (!split_header(line, key, payload))
            throw InputError("malformed model line: '" + line + "'");
        if (key == "states") {
            if (have_states) throw InputError("duplicate states line");
            states = split_words(payload);
            have_states = true;
        } else if (key == "edge") {
            auto pair = split_words(payload);
            if (pair.size() != 2)
                throw InputError("edge line needs exactly two states: '" + line + "'");
            edges.emplace_back(pair[0], pair[1]);
        } else if (key.rfind("val ", 0) == 0) {
            std::string var = std::string(clean(std::string_view(key).substr(4)));
            if (!valid_var_name(var))
                throw InputError("invalid variable name: '" + var + "'");
            vals.emplace_back(std::move(var), split_words(payload));
        } else {
            throw InputError("unknown model line: '" + line + "'");
        }
    }

    if (!have_states) throw InputError("model needs a states line");
    KripkeModel model(std::move(states));
    for (const auto& [from, to] : edges)
        model.add_edge(model.require_index(from), model.require_index(to));
    for (const auto& [var, names] : vals)
        for (const auto& name : names) model.add_val(var, model.require_index(name));
    return model;
}

std::string write_model(const KripkeModel& model) {
    std::ostringstream out;
    out << "states:";
    for (const auto& name : model.states()) out << ' ' << name;
    out << '\n';
    for (std::size_t i = 0; i < model.size(); ++i) {
        const Bits& row = model.successors(i);
        for (std::size_t j = row.find_first(); j != Bits::npos; j = row.find_next(j))
            out << "edge: " << model.state_name(i) << ' ' << model.state_name(j)
                << '\n';
    }
    for (const auto& [var, row] : model.valuation()) {
        if (row.none()) continue;
        out << "val " << var << ':';
        for (std::size_t j = row.find_first(); j != Bits::npos; j = row.find_next(j))
            out << ' ' << model.state_name(j);
        out << '\n';
    }
    return out.str();
}

// --------------------------------------------------------------------------
// Slice-graph instances
// --------------------------------------------------------------------------

namespace {

// Shared scaffolding for the two graph formats: node lines are read by the
// caller-provided handler, then edges/source/target are resolved by name.
template <typename Graph>
struct GraphLines {
    std::vector<std::pair<std::string, std::string>> edges;
    std::string source, target;
    bool have_source = false, have_target = false;

    void take_common(const std::string& key, const std::string& payload,
                     const std::string& line) {
        if (key == "edge") {
            auto pair = split_words(payload);
            if (pair.size() != 2)
                throw InputError("edge line needs exactly two nodes: '" + line + "'");
            edges.emplace_back(pair[0], pair[1]);
        } else if (key == "source") {
            if (have_source) throw InputError("duplicate source line");
            source = payload;
            have_source = true;
        } else if (key == "target") {
            if (have_target) throw InputError("duplicate target line");
            target = payload;
            have_target = true;
        } else {
            throw InputError("unknown graph line: '" + line + "'");
        }
    }

    void finish(Graph& graph, std::size_t& src, std::size_t& tgt) {
        if (!have_source || !have_target)
            throw InputError("graph instance needs source and target lines");
        for (const auto& [from, to] : edges)
            graph.add_edge(graph.require_index(from), graph.require_index(to));
        src = graph.require_index(source);
        tgt = graph.require_index(target);
    }
};

void require_plain(const std::string& name) {
    if (!plain_identifier(name))
        throw InputError("node name '" + name +
                         "' is not a plain identifier ('@'/'^' are reserved)");
}

} // namespace

AsAgapInstance parse_asagap(std::string_view text) {
    AsAgapInstance inst;
    GraphLines<SliceGraph> lines;
    for (const std::string& line : nonempty_lines(text)) {
        std::string key, payload;
        if (!split_header(line, key, payload))
            throw InputError("malformed graph line: '" + line + "'");
        if (key.rfind("slice ", 0) == 0) {
            const std::string digits{clean(std::string_view(key).substr(6))};
            if (digits.empty() ||
                !std::all_of(digits.begin(), digits.end(),
                             [](unsigned char c) { return std::isdigit(c); }))
                throw InputError("malformed slice index: '" + line + "'");
            const std::size_t slice = std::stoul(digits);
            if (slice > inst.graph.num_slices()) inst.graph.set_num_slices(slice);
            for (const auto& name : split_words(payload)) {
                require_plain(name);
                inst.graph.add_node(name, slice);
            }
        } else {
            lines.take_common(key, payload, line);
        }
    }
    lines.finish(inst.graph, inst.source, inst.target);
    return inst;
}

std::string write_asagap(const AsAgapInstance& inst) {
    std::ostringstream out;
    for (std::size_t i = 1; i <= inst.graph.num_slices(); ++i) {
        out << "slice " << i << ':';
        for (std::size_t v : inst.graph.nodes_in_slice(i)) out << ' ' << inst.graph.name(v);
        out << '\n';
    }
    for (std::size_t v = 0; v < inst.graph.size(); ++v)
        for (std::size_t w : inst.graph.successors(v))
            out << "edge: " << inst.graph.name(v) << ' ' << inst.graph.name(w) << '\n';
    out << "source: " << inst.graph.name(inst.source) << '\n';
    out << "target: " << inst.graph.name(inst.target) << '\n';
    return out.str();
}

AgapInstance parse_agap(std::string_view text) {
    AgapInstance inst;
    GraphLines<AlternatingGraph> lines;
    for (const std::string& line : nonempty_lines(text)) {
        std::string key, payload;
        if (!split_header(line, key, payload))
            throw InputError("malformed graph line: '" + line + "'");
        if (key == "exists" || key == "forall") {
            const NodeKind kind =
                key == "exists" ? NodeKind::Existential : NodeKind::Universal;
            for (const auto& name : split_words(payload)) {
                require_plain(name);
                inst.graph.add_node(name, kind);
            }
        } else {
            lines.take_common(key, payload, line);
        }
    }
    lines.finish(inst.graph, inst.source, inst.target);
    return inst;
}

std::string write_agap(const AgapInstance& inst) {
    std::ostringstream out;
    for (NodeKind kind : {NodeKind::Existential, NodeKind::Universal}) {
        bool any = false;
        for (std::size_t v = 0; v < inst.graph.size(); ++v)
            if (inst.graph.kind(v) == kind) { any = true; break; }
        if (!any) continue;
        out << (kind == NodeKind::Existential ? "exists:" : "forall:");
        for (std::size_t v = 0; v < inst.graph.size(); ++v)
            if (inst.graph.kind(v) == kind) out << ' ' << inst.graph.name(v);
        out << '\n';
    }
    for (std::size_t v = 0; v < inst.graph.size(); ++v)
        for (std::size_t w : inst.graph.successors(v))
            out << "edge: " << inst.graph.name(v) << ' ' << inst.graph.name(w) << '\n';
    out << "source: " << inst.graph.name(inst.source) << '\n';
    out << "target: " << inst.graph.name(inst.target) << '\n';
    return out.str();
}

// --------------------------------------------------------------------------
// Instance bundles
// --------------------------------------------------------------------------

McInstance parse_bundle(std::string_view text) {
    std::string logic_text, state, polarity_text, formula_text;
    bool have_logic = false, have_state = false, have_polarity = false,
         have_formula = false;
    std::ostringstream model_text;

    for (const std::string& line : nonempty_lines(text)) {
        std::string key, payload;
        if (!split_header(line, key, payload))
            throw InputError("malformed bundle line: '" + line + "'");
        if (key == "logic") {
            if (have_logic) throw InputError("duplicate logic line");
            logic_text = payload;
            have_logic = true;
        } else if (key == "state") {
            if (have_state) throw InputError("duplicate state line");
            state = payload;
            have_state = true;
        } else if (key == "polarity") {
            if (have_polarity) throw InputError("duplicate polarity line");
            polarity_text = payload;
            have_polarity = true;
        } else if (key == "formula") {
            if (have_formula) throw InputError("duplicate formula line");
            formula_text = payload;
            have_formula = true;
        } else {
            model_text << line << '\n';
        }
    }
    if (!have_logic || !have_state || !have_polarity || !have_formula)
        throw InputError("bundle needs logic, state, polarity and formula lines");

    auto logic = logic_from_string(logic_text);
    if (!logic) throw InputError("unknown logic: '" + logic_text + "'");
    auto polarity = polarity_from_string(polarity_text);
    if (!polarity) throw InputError("unknown polarity: '" + polarity_text + "'");

    McInstance inst{.arena = std::make_shared<FormulaArena>(),
                    .formula = IntF{0},
                    .model = parse_model(model_text.str()),
                    .state = std::move(state),
                    .logic = *logic,
                    .polarity = *polarity};
    if (is_intuitionistic(*logic))
        inst.formula = parse_int(*inst.arena, formula_text);
    else
        inst.formula = parse_modal(*inst.arena, formula_text);
    inst.model.require_index(inst.state);
    return inst;
}

std::string write_bundle(const McInstance& inst) {
    std::ostringstream out;
    out << "logic: " << to_string(inst.logic) << '\n';
    out << "state: " << inst.state << '\n';
    out << "polarity: " << to_string(inst.polarity) << '\n';
    if (inst.is_modal())
        out << "formula: " << render(*inst.arena, inst.modal_formula()) << '\n';
    else
        out << "formula: " << render(*inst.arena, inst.int_formula()) << '\n';
    out << write_model(inst.model);
    return out.str();
}

} // namespace imc
