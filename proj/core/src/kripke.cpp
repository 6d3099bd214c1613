#include "imc/kripke.hpp"

#include <sstream>

namespace imc {

Relation make_relation(std::size_t n) {
    return Relation(n, Bits(n));
}

Relation transitive_closure(Relation rel) {
    const std::size_t n = rel.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rel[i][k]) rel[i] |= rel[k];
    return rel;
}

Relation reflexive_closure(Relation rel) {
    for (std::size_t i = 0; i < rel.size(); ++i) rel[i].set(i);
    return rel;
}

bool relation_transitive(const Relation& rel) {
    const std::size_t n = rel.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = rel[i].find_first(); j != Bits::npos; j = rel[i].find_next(j))
            if (!rel[j].is_subset_of(rel[i])) return false;
    return true;
}

bool is_intuitionistic(LogicClass logic) {
    switch (logic) {
    case LogicClass::BPL:
    case LogicClass::IPC:
    case LogicClass::KC:
    case LogicClass::FPL: return true;
    default: return false;
    }
}

LogicClass modal_companion(LogicClass logic) {
    switch (logic) {
    case LogicClass::BPL: return LogicClass::K4;
    case LogicClass::IPC: return LogicClass::S4;
    case LogicClass::KC: return LogicClass::S42;
    case LogicClass::FPL: return LogicClass::PrL;
    default:
        throw InputError("modal companion requested for a modal logic class");
    }
}

std::string_view to_string(LogicClass logic) {
    switch (logic) {
    case LogicClass::BPL: return "BPL";
    case LogicClass::IPC: return "IPC";
    case LogicClass::KC: return "KC";
    case LogicClass::FPL: return "FPL";
    case LogicClass::K: return "K";
    case LogicClass::K4: return "K4";
    case LogicClass::S4: return "S4";
    case LogicClass::S42: return "S42";
    case LogicClass::PrL: return "PrL";
    }
    return "?";
}

std::optional<LogicClass> logic_from_string(std::string_view text) {
    if (text == "BPL") return LogicClass::BPL;
    if (text == "IPC") return LogicClass::IPC;
    if (text == "KC") return LogicClass::KC;
    if (text == "FPL") return LogicClass::FPL;
    if (text == "K") return LogicClass::K;
    if (text == "K4") return LogicClass::K4;
    if (text == "S4") return LogicClass::S4;
    if (text == "S42") return LogicClass::S42;
    if (text == "PrL") return LogicClass::PrL;
    return std::nullopt;
}

bool valid_state_name(std::string_view name) {
    if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) return false;
    for (char c : name.substr(1)) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
                        c == '@' || c == '^';
        if (!ok) return false;
    }
    return true;
}

KripkeModel::KripkeModel(std::vector<std::string> states) : states_(std::move(states)) {
    if (states_.empty()) throw InputError("a model needs at least one state");
    for (std::size_t i = 0; i < states_.size(); ++i) {
        if (!valid_state_name(states_[i]))
            throw InputError("invalid state name: '" + states_[i] + "'");
        if (!index_.emplace(states_[i], i).second)
            throw InputError("duplicate state name: '" + states_[i] + "'");
    }
    rel_ = make_relation(states_.size());
}

std::optional<std::size_t> KripkeModel::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t KripkeModel::require_index(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw InputError("unknown state: '" + std::string(name) + "'");
    return *i;
}

void KripkeModel::add_edge(std::size_t from, std::size_t to) {
    rel_[from].set(to);
}

void KripkeModel::set_relation(Relation rel) {
    if (rel.size() != size())
        throw InputError("relation size does not match the state count");
    for (const Bits& row : rel)
        if (row.size() != size())
            throw InputError("relation row width does not match the state count");
    rel_ = std::move(rel);
}

void KripkeModel::add_val(const std::string& var, std::size_t state) {
    auto it = val_.find(var);
    if (it == val_.end()) it = val_.emplace(var, Bits(size())).first;
    it->second.set(state);
}

void KripkeModel::set_val_row(const std::string& var, Bits row) {
    if (row.size() != size())
        throw InputError("valuation row width does not match the state count");
    val_[var] = std::move(row);
}

Bits KripkeModel::val_row(const std::string& var) const {
    auto it = val_.find(var);
    if (it == val_.end()) return Bits(size());
    return it->second;
}

// --------------------------------------------------------------------------
// Frame validation
// --------------------------------------------------------------------------

FrameReport validate(const KripkeModel& model, LogicClass logic) {
    const std::size_t n = model.size();
    const Relation& rel = model.relation();
    FrameReport r;

    for (std::size_t i = 0; i < n && r.transitive; ++i) {
        for (std::size_t j = rel[i].find_first(); j != Bits::npos; j = rel[i].find_next(j)) {
            if (rel[j].is_subset_of(rel[i])) continue;
            const Bits missing = rel[j] - rel[i];
            const std::size_t k = missing.find_first();
            r.transitive = false;
            r.transitive_cex = {model.state_name(i), model.state_name(j), model.state_name(k)};
            break;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (r.reflexive && !rel[i][i]) {
            r.reflexive = false;
            r.reflexive_cex = {model.state_name(i), model.state_name(i)};
        }
        if (r.irreflexive && rel[i][i]) {
            r.irreflexive = false;
            r.irreflexive_cex = {model.state_name(i), model.state_name(i)};
        }
    }

    for (std::size_t a = 0; a < n && r.directed; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            Bits common = rel[a] & rel[b];
            if (!common.any()) {
                r.directed = false;
                r.directed_cex = {model.state_name(a), model.state_name(b)};
                break;
            }
        }
    }

    for (const auto& [var, set] : model.valuation()) {
        if (!r.monotone) break;
        for (std::size_t a = set.find_first(); a != Bits::npos; a = set.find_next(a)) {
            if (rel[a].is_subset_of(set)) continue;
            const Bits escaped = rel[a] - set;
            const std::size_t b = escaped.find_first();
            r.monotone = false;
            r.monotone_cex = {var, model.state_name(a), model.state_name(b)};
            break;
        }
    }

    (void)logic; // all five properties are computed; the class picks which matter
    return r;
}

bool FrameReport::admissible_for(LogicClass logic) const {
    switch (logic) {
    case LogicClass::K: return true;
    case LogicClass::K4: return transitive;
    case LogicClass::S4: return transitive && reflexive;
    case LogicClass::S42: return transitive && reflexive && directed;
    case LogicClass::PrL: return transitive && irreflexive;
    case LogicClass::BPL: return transitive && monotone;
    case LogicClass::IPC: return transitive && reflexive && monotone;
    case LogicClass::KC: return transitive && reflexive && directed && monotone;
    case LogicClass::FPL: return transitive && irreflexive && monotone;
    }
    return false;
}

namespace {

std::string pair_text(const std::vector<std::string>& cex) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < cex.size(); ++i) {
        if (i) os << ',';
        os << cex[i];
    }
    os << ')';
    return os.str();
}

} // namespace

std::string FrameReport::violation_message(LogicClass logic) const {
    if (admissible_for(logic)) return "";
    std::ostringstream os;
    os << "model not admissible for " << to_string(logic) << ":";
    const bool need_refl = logic == LogicClass::IPC || logic == LogicClass::KC ||
                           logic == LogicClass::S4 || logic == LogicClass::S42;
    const bool need_irrefl = logic == LogicClass::FPL || logic == LogicClass::PrL;
    const bool need_directed = logic == LogicClass::KC || logic == LogicClass::S42;
    const bool need_monotone = is_intuitionistic(logic);
    if (logic != LogicClass::K && !transitive)
        os << " not transitive, counterexample " << pair_text(transitive_cex) << ";";
    if (need_refl && !reflexive)
        os << " not reflexive, counterexample " << pair_text(reflexive_cex) << ";";
    if (need_irrefl && !irreflexive)
        os << " not irreflexive, counterexample " << pair_text(irreflexive_cex) << ";";
    if (need_directed && !directed)
        os << " not directed, counterexample " << pair_text(directed_cex) << ";";
    if (need_monotone && !monotone)
        os << " valuation not monotone, counterexample " << pair_text(monotone_cex) << ";";
    std::string s = os.str();
    if (s.back() == ';') s.pop_back();
    return s;
}

void require_admissible(const KripkeModel& model, LogicClass logic) {
    FrameReport r = validate(model, logic);
    if (!r.admissible_for(logic)) throw AdmissibilityError(r.violation_message(logic));
}

} // namespace imc
