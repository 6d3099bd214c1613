#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "imc/errors.hpp"

namespace imc {

// One row of a dense boolean matrix: bit j of successors(i) says state i sees
// state j. All target models are small and dense after closures, so dense
// rows beat edge lists throughout.
using Bits = boost::dynamic_bitset<std::uint64_t>;
using Relation = std::vector<Bits>;

Relation make_relation(std::size_t n);

// Smallest transitive superset (Warshall over bitset rows).
Relation transitive_closure(Relation rel);

// Adds exactly the diagonal.
Relation reflexive_closure(Relation rel);

bool relation_transitive(const Relation& rel);

enum class LogicClass { BPL, IPC, KC, FPL, K, K4, S4, S42, PrL };

bool is_intuitionistic(LogicClass logic);

// BPL→K4, IPC→S4, KC→S42, FPL→PrL; InputError for modal classes.
LogicClass modal_companion(LogicClass logic);

std::string_view to_string(LogicClass logic);
std::optional<LogicClass> logic_from_string(std::string_view text);

// True iff `name` matches [a-z][a-z0-9_@^]* — the superset of plain
// identifiers that admits the synthesized names of the reductions
// (`v@2`, `a_3^1`, ...). Plain user inputs are restricted further by the
// graph parsers.
bool valid_state_name(std::string_view name);

class KripkeModel {
public:
    // InputError when the state list is empty, contains duplicates, or
    // contains a name that is not token-safe.
    explicit KripkeModel(std::vector<std::string> states);

    std::size_t size() const { return states_.size(); }
    const std::vector<std::string>& states() const { return states_; }
    const std::string& state_name(std::size_t i) const { return states_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require_index(std::string_view name) const; // InputError

    void add_edge(std::size_t from, std::size_t to);
    bool has_edge(std::size_t from, std::size_t to) const { return rel_[from][to]; }
    const Bits& successors(std::size_t i) const { return rel_[i]; }
    const Relation& relation() const { return rel_; }
    void set_relation(Relation rel); // InputError on size mismatch

    void add_val(const std::string& var, std::size_t state);
    void set_val_row(const std::string& var, Bits row);
    // The satisfying set of a variable; unknown variables denote the empty set.
    Bits val_row(const std::string& var) const;
    const std::map<std::string, Bits>& valuation() const { return val_; }

private:
    std::vector<std::string> states_;
    std::map<std::string, std::size_t, std::less<>> index_;
    Relation rel_;
    std::map<std::string, Bits> val_;
};

// Outcome of the frame/valuation property checks. Violations are data, not
// errors; each failed property records a first counterexample as state names
// (plus the variable name for monotonicity).
struct FrameReport {
    bool transitive = true;
    bool reflexive = true;
    bool irreflexive = true;
    bool directed = true;
    bool monotone = true;
    std::vector<std::string> transitive_cex; // {a,b,c}: aRb, bRc, not aRc
    std::vector<std::string> reflexive_cex;  // {a,a}: missing self-loop
    std::vector<std::string> irreflexive_cex; // {a,a}: offending self-loop
    std::vector<std::string> directed_cex;   // {a,b}: no common successor
    std::vector<std::string> monotone_cex;   // {p,a,b}: a in xi(p), aRb, b not in xi(p)

    bool admissible_for(LogicClass logic) const;
    // Empty string when admissible; otherwise a one-line diagnosis.
    std::string violation_message(LogicClass logic) const;
};

// Frame requirements per class: BPL/K4 transitive; IPC/S4 preorder; KC/S42
// directed preorder; FPL/PrL transitive+irreflexive; K unrestricted.
// Intuitionistic classes additionally require a monotone valuation.
FrameReport validate(const KripkeModel& model, LogicClass logic);

// Throws AdmissibilityError with the violation message when not admissible.
void require_admissible(const KripkeModel& model, LogicClass logic);

} // namespace imc
