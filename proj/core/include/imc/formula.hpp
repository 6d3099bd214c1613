#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "imc/errors.hpp"

namespace imc {

// Node tags of the two abstract syntaxes. Both trees consist of primitive
// forms only; negation, truth, modal conjunction/disjunction and diamond are
// abbreviations expanded at construction time.
enum class IntOp : std::uint8_t { Bot, Var, And, Or, Impl };
enum class ModalOp : std::uint8_t { Bot, Var, Impl, Box };

// Opaque handles into a FormulaArena. A handle is meaningful only together
// with the arena that produced it; the arena hash-conses nodes, so equal ids
// mean structurally equal formulas.
struct IntF {
    std::uint32_t id = 0;
    friend bool operator==(IntF, IntF) = default;
};

struct ModalF {
    std::uint32_t id = 0;
    friend bool operator==(ModalF, ModalF) = default;
};

struct FragmentReport {
    std::uint64_t variable_count = 0;
    std::set<std::string> variable_set;
    bool implicational = false;          // no And/Or node occurs (Bot permitted)
    bool strictly_implicational = false; // modal shape Bot | Var | Box(Impl(.,.))
    std::uint64_t size = 0;              // tree node count
};

// True iff `name` matches [a-z][a-z0-9_]*.
bool valid_var_name(std::string_view name);

// Owns formula nodes for both languages. Construction is not thread-safe;
// once built, formulas are immutable and may be read concurrently.
class FormulaArena {
public:
    FormulaArena();

    // --- intuitionistic primitives -----------------------------------------
    IntF ibot();
    IntF ivar(std::string_view name); // InputError on invalid variable name
    IntF iand(IntF a, IntF b);
    IntF ior(IntF a, IntF b);
    IntF iimpl(IntF a, IntF b);

    // --- intuitionistic sugar ----------------------------------------------
    IntF ineg(IntF a) { return iimpl(a, ibot()); } // ¬φ := φ⊳⊥
    IntF itop() { return iimpl(ibot(), ibot()); }  // ⊤  := ⊥⊳⊥

    // --- modal primitives ---------------------------------------------------
    ModalF mbot();
    ModalF mvar(std::string_view name);
    ModalF mimpl(ModalF a, ModalF b);
    ModalF mbox(ModalF a);

    // --- modal sugar (standard abbreviations) -------------------------------
    ModalF mneg(ModalF a) { return mimpl(a, mbot()); }          // ¬φ := φ→⊥
    ModalF mtop() { return mneg(mbot()); }                      // ⊤  := ¬⊥
    ModalF mor(ModalF a, ModalF b) { return mimpl(mneg(a), b); }          // φ∨ψ := ¬φ→ψ
    ModalF mand(ModalF a, ModalF b) { return mneg(mimpl(a, mneg(b))); }   // φ∧ψ := ¬(φ→¬ψ)
    ModalF mdia(ModalF a) { return mneg(mbox(mneg(a))); }       // ◇φ := ¬□¬φ

    // --- node inspection -----------------------------------------------------
    IntOp op(IntF f) const;
    ModalOp op(ModalF f) const;
    IntF left(IntF f) const;   // And/Or/Impl
    IntF right(IntF f) const;
    ModalF left(ModalF f) const;  // Impl
    ModalF right(ModalF f) const;
    ModalF child(ModalF f) const; // Box
    const std::string& name(IntF f) const;
    const std::string& name(ModalF f) const;

    std::size_t int_node_count() const { return int_nodes_.size(); }
    std::size_t modal_node_count() const { return modal_nodes_.size(); }

private:
    struct Node {
        std::uint8_t op;
        std::uint32_t a; // left child id, Box child id, or variable-name index
        std::uint32_t b; // right child id
    };

    std::uint32_t intern_name(std::string_view name);
    std::uint32_t intern_int(Node n);
    std::uint32_t intern_modal(Node n);

    std::vector<Node> int_nodes_;
    std::vector<Node> modal_nodes_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> int_index_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> modal_index_;
    std::vector<std::string> names_;
    std::map<std::string, std::uint32_t, std::less<>> name_index_;
};

// Parsing per the shared ASCII grammar: atoms `false`, `true`, identifiers
// [a-z][a-z0-9_]*; prefix `~`, `[]`, `<>`; infix `&`, `|`, `->`; parentheses;
// whitespace insignificant. Precedence, tightest first: prefix, `&`, `|`,
// `->`; `->` is right-associative, `&`/`|` left-associative. parse_int
// rejects the modal prefixes `[]` and `<>`.
IntF parse_int(FormulaArena& arena, std::string_view text);     // ParseError
ModalF parse_modal(FormulaArena& arena, std::string_view text); // ParseError

// Minimally parenthesized text; parse(render(f)) == f structurally.
std::string render(const FormulaArena& arena, IntF f);
std::string render(const FormulaArena& arena, ModalF f);

FragmentReport analyze(const FormulaArena& arena, IntF f);
FragmentReport analyze(const FormulaArena& arena, ModalF f);

} // namespace imc
