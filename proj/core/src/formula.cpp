#include "imc/formula.hpp"

#include <cassert>
#include <sstream>

namespace imc {

namespace {

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_rest(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

std::uint64_t node_key(std::uint8_t op, std::uint32_t a, std::uint32_t b) {
    std::uint64_t h = 0x100000001b3ULL * (op + 1);
    h ^= a + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace

bool valid_var_name(std::string_view name) {
    if (name.empty() || !ident_start(name[0])) return false;
    for (char c : name.substr(1))
        if (!ident_rest(c)) return false;
    return true;
}

FormulaArena::FormulaArena() = default;

std::uint32_t FormulaArena::intern_name(std::string_view name) {
    if (!valid_var_name(name))
        throw InputError("invalid variable name: '" + std::string(name) + "'");
    auto it = name_index_.find(name);
    if (it != name_index_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    name_index_.emplace(names_.back(), id);
    return id;
}

std::uint32_t FormulaArena::intern_int(Node n) {
    auto& bucket = int_index_[node_key(n.op, n.a, n.b)];
    for (std::uint32_t id : bucket) {
        const Node& e = int_nodes_[id];
        if (e.op == n.op && e.a == n.a && e.b == n.b) return id;
    }
    const auto id = static_cast<std::uint32_t>(int_nodes_.size());
    int_nodes_.push_back(n);
    bucket.push_back(id);
    return id;
}

std::uint32_t FormulaArena::intern_modal(Node n) {
    auto& bucket = modal_index_[node_key(n.op, n.a, n.b)];
    for (std::uint32_t id : bucket) {
        const Node& e = modal_nodes_[id];
        if (e.op == n.op && e.a == n.a && e.b == n.b) return id;
    }
    const auto id = static_cast<std::uint32_t>(modal_nodes_.size());
    modal_nodes_.push_back(n);
    bucket.push_back(id);
    return id;
}

IntF FormulaArena::ibot() {
    return {intern_int({static_cast<std::uint8_t>(IntOp::Bot), 0, 0})};
}
IntF FormulaArena::ivar(std::string_view name) {
    return {intern_int({static_cast<std::uint8_t>(IntOp::Var), intern_name(name), 0})};
}
IntF FormulaArena::iand(IntF a, IntF b) {
    return {intern_int({static_cast<std::uint8_t>(IntOp::And), a.id, b.id})};
}
IntF FormulaArena::ior(IntF a, IntF b) {
    return {intern_int({static_cast<std::uint8_t>(IntOp::Or), a.id, b.id})};
}
IntF FormulaArena::iimpl(IntF a, IntF b) {
    return {intern_int({static_cast<std::uint8_t>(IntOp::Impl), a.id, b.id})};
}

ModalF FormulaArena::mbot() {
    return {intern_modal({static_cast<std::uint8_t>(ModalOp::Bot), 0, 0})};
}
ModalF FormulaArena::mvar(std::string_view name) {
    return {intern_modal({static_cast<std::uint8_t>(ModalOp::Var), intern_name(name), 0})};
}
ModalF FormulaArena::mimpl(ModalF a, ModalF b) {
    return {intern_modal({static_cast<std::uint8_t>(ModalOp::Impl), a.id, b.id})};
}
ModalF FormulaArena::mbox(ModalF a) {
    return {intern_modal({static_cast<std::uint8_t>(ModalOp::Box), a.id, 0})};
}

IntOp FormulaArena::op(IntF f) const { return static_cast<IntOp>(int_nodes_[f.id].op); }
ModalOp FormulaArena::op(ModalF f) const { return static_cast<ModalOp>(modal_nodes_[f.id].op); }

IntF FormulaArena::left(IntF f) const { return {int_nodes_[f.id].a}; }
IntF FormulaArena::right(IntF f) const { return {int_nodes_[f.id].b}; }
ModalF FormulaArena::left(ModalF f) const { return {modal_nodes_[f.id].a}; }
ModalF FormulaArena::right(ModalF f) const { return {modal_nodes_[f.id].b}; }
ModalF FormulaArena::child(ModalF f) const { return {modal_nodes_[f.id].a}; }

const std::string& FormulaArena::name(IntF f) const {
    assert(op(f) == IntOp::Var);
    return names_[int_nodes_[f.id].a];
}
const std::string& FormulaArena::name(ModalF f) const {
    assert(op(f) == ModalOp::Var);
    return names_[modal_nodes_[f.id].a];
}

// --------------------------------------------------------------------------
// Parsing
// --------------------------------------------------------------------------

namespace {

enum class Tok { False, True, Ident, Tilde, Box, Diamond, Amp, Pipe, Arrow, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;  // identifier payload
    std::size_t pos;   // 1-based position of the first character
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && is_space(text_[i_])) ++i_;
        const std::size_t pos = i_ + 1;
        if (i_ >= text_.size()) {
            cur_ = {Tok::End, "", pos};
            return;
        }
        const char c = text_[i_];
        if (ident_start(c)) {
            std::size_t j = i_ + 1;
            while (j < text_.size() && ident_rest(text_[j])) ++j;
            std::string word(text_.substr(i_, j - i_));
            i_ = j;
            if (word == "false") cur_ = {Tok::False, "", pos};
            else if (word == "true") cur_ = {Tok::True, "", pos};
            else cur_ = {Tok::Ident, std::move(word), pos};
            return;
        }
        switch (c) {
        case '~': ++i_; cur_ = {Tok::Tilde, "", pos}; return;
        case '&': ++i_; cur_ = {Tok::Amp, "", pos}; return;
        case '|': ++i_; cur_ = {Tok::Pipe, "", pos}; return;
        case '(': ++i_; cur_ = {Tok::LParen, "", pos}; return;
        case ')': ++i_; cur_ = {Tok::RParen, "", pos}; return;
        case '[':
            if (i_ + 1 < text_.size() && text_[i_ + 1] == ']') {
                i_ += 2;
                cur_ = {Tok::Box, "", pos};
                return;
            }
            throw ParseError("expected ']' after '['", pos);
        case '<':
            if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
                i_ += 2;
                cur_ = {Tok::Diamond, "", pos};
                return;
            }
            throw ParseError("expected '>' after '<'", pos);
        case '-':
            if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
                i_ += 2;
                cur_ = {Tok::Arrow, "", pos};
                return;
            }
            throw ParseError("expected '>' after '-'", pos);
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
    }

    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

    std::string_view text_;
    std::size_t i_ = 0;
    Token cur_{Tok::End, "", 1};
};

// One grammar, two tree builders. Precedence, tightest first: prefix
// operators, '&', '|', '->'; '->' right-associative, '&'/'|' left-associative.
template <typename F, typename Build>
class Parser {
public:
    Parser(Lexer lex, Build build) : lex_(std::move(lex)), build_(build) {}

    F run() {
        if (lex_.peek().kind == Tok::End)
            throw ParseError("empty input", lex_.peek().pos);
        F f = impl();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) {
            if (t.kind == Tok::RParen) throw ParseError("unbalanced ')'", t.pos);
            throw ParseError("unexpected trailing input", t.pos);
        }
        return f;
    }

private:
    F impl() {
        F lhs = disj();
        if (lex_.peek().kind == Tok::Arrow) {
            lex_.take();
            return build_.impl(lhs, impl());
        }
        return lhs;
    }

    F disj() {
        F lhs = conj();
        while (lex_.peek().kind == Tok::Pipe) {
            lex_.take();
            lhs = build_.disj(lhs, conj());
        }
        return lhs;
    }

    F conj() {
        F lhs = prefix();
        while (lex_.peek().kind == Tok::Amp) {
            lex_.take();
            lhs = build_.conj(lhs, prefix());
        }
        return lhs;
    }

    F prefix() {
        const Token& t = lex_.peek();
        switch (t.kind) {
        case Tok::Tilde: lex_.take(); return build_.neg(prefix());
        case Tok::Box: {
            Token tok = lex_.take();
            return build_.box(prefix(), tok.pos);
        }
        case Tok::Diamond: {
            Token tok = lex_.take();
            return build_.diamond(prefix(), tok.pos);
        }
        default: return atom();
        }
    }

    F atom() {
        Token t = lex_.take();
        switch (t.kind) {
        case Tok::False: return build_.bot();
        case Tok::True: return build_.top();
        case Tok::Ident: return build_.var(t.text);
        case Tok::LParen: {
            F f = impl();
            Token close = lex_.take();
            if (close.kind != Tok::RParen)
                throw ParseError("unbalanced '(': expected ')'", close.pos);
            return f;
        }
        case Tok::End: throw ParseError("unexpected end of input", t.pos);
        default: throw ParseError("expected a formula", t.pos);
        }
    }

    Lexer lex_;
    Build build_;
};

struct IntBuild {
    FormulaArena* a;
    IntF bot() { return a->ibot(); }
    IntF top() { return a->itop(); }
    IntF var(const std::string& n) { return a->ivar(n); }
    IntF impl(IntF x, IntF y) { return a->iimpl(x, y); }
    IntF conj(IntF x, IntF y) { return a->iand(x, y); }
    IntF disj(IntF x, IntF y) { return a->ior(x, y); }
    IntF neg(IntF x) { return a->ineg(x); }
    IntF box(IntF, std::size_t pos) {
        throw ParseError("'[]' is not an intuitionistic connective", pos);
    }
    IntF diamond(IntF, std::size_t pos) {
        throw ParseError("'<>' is not an intuitionistic connective", pos);
    }
};

struct ModalBuild {
    FormulaArena* a;
    ModalF bot() { return a->mbot(); }
    ModalF top() { return a->mtop(); }
    ModalF var(const std::string& n) { return a->mvar(n); }
    ModalF impl(ModalF x, ModalF y) { return a->mimpl(x, y); }
    ModalF conj(ModalF x, ModalF y) { return a->mand(x, y); }
    ModalF disj(ModalF x, ModalF y) { return a->mor(x, y); }
    ModalF neg(ModalF x) { return a->mneg(x); }
    ModalF box(ModalF x, std::size_t) { return a->mbox(x); }
    ModalF diamond(ModalF x, std::size_t) { return a->mdia(x); }
};

} // namespace

IntF parse_int(FormulaArena& arena, std::string_view text) {
    Parser<IntF, IntBuild> p(Lexer(text), IntBuild{&arena});
    return p.run();
}

ModalF parse_modal(FormulaArena& arena, std::string_view text) {
    Parser<ModalF, ModalBuild> p(Lexer(text), ModalBuild{&arena});
    return p.run();
}

// --------------------------------------------------------------------------
// Rendering
// --------------------------------------------------------------------------

namespace {

// Precedence levels for printing: 0 = implication, 1 = disjunction,
// 2 = conjunction, 3 = prefix/atom. A subterm whose own level is below the
// context's minimum gets parentheses.
constexpr int kImpl = 0, kOr = 1, kAnd = 2, kAtom = 3;

void render_int(const FormulaArena& a, IntF f, int min_level, std::string& out) {
    switch (a.op(f)) {
    case IntOp::Bot: out += "false"; return;
    case IntOp::Var: out += a.name(f); return;
    case IntOp::And: {
        const bool parens = kAnd < min_level;
        if (parens) out += '(';
        render_int(a, a.left(f), kAnd, out);
        out += " & ";
        render_int(a, a.right(f), kAnd + 1, out);
        if (parens) out += ')';
        return;
    }
    case IntOp::Or: {
        const bool parens = kOr < min_level;
        if (parens) out += '(';
        render_int(a, a.left(f), kOr, out);
        out += " | ";
        render_int(a, a.right(f), kOr + 1, out);
        if (parens) out += ')';
        return;
    }
    case IntOp::Impl: {
        const bool parens = kImpl < min_level;
        if (parens) out += '(';
        render_int(a, a.left(f), kImpl + 1, out);
        out += " -> ";
        render_int(a, a.right(f), kImpl, out);
        if (parens) out += ')';
        return;
    }
    }
}

void render_modal(const FormulaArena& a, ModalF f, int min_level, std::string& out) {
    switch (a.op(f)) {
    case ModalOp::Bot: out += "false"; return;
    case ModalOp::Var: out += a.name(f); return;
    case ModalOp::Box:
        out += "[]";
        render_modal(a, a.child(f), kAtom, out);
        return;
    case ModalOp::Impl: {
        const bool parens = kImpl < min_level;
        if (parens) out += '(';
        render_modal(a, a.left(f), kImpl + 1, out);
        out += " -> ";
        render_modal(a, a.right(f), kImpl, out);
        if (parens) out += ')';
        return;
    }
    }
}

} // namespace

std::string render(const FormulaArena& arena, IntF f) {
    std::string out;
    render_int(arena, f, kImpl, out);
    return out;
}

std::string render(const FormulaArena& arena, ModalF f) {
    std::string out;
    render_modal(arena, f, kImpl, out);
    return out;
}

// --------------------------------------------------------------------------
// Fragment analysis
// --------------------------------------------------------------------------

namespace {

// Tree size of a hash-consed node: children counted per occurrence.
std::uint64_t tree_size_int(const FormulaArena& a, IntF f,
                            std::unordered_map<std::uint32_t, std::uint64_t>& memo) {
    auto it = memo.find(f.id);
    if (it != memo.end()) return it->second;
    std::uint64_t s = 1;
    switch (a.op(f)) {
    case IntOp::Bot:
    case IntOp::Var: break;
    case IntOp::And:
    case IntOp::Or:
    case IntOp::Impl:
        s += tree_size_int(a, a.left(f), memo) + tree_size_int(a, a.right(f), memo);
        break;
    }
    memo.emplace(f.id, s);
    return s;
}

std::uint64_t tree_size_modal(const FormulaArena& a, ModalF f,
                              std::unordered_map<std::uint32_t, std::uint64_t>& memo) {
    auto it = memo.find(f.id);
    if (it != memo.end()) return it->second;
    std::uint64_t s = 1;
    switch (a.op(f)) {
    case ModalOp::Bot:
    case ModalOp::Var: break;
    case ModalOp::Box: s += tree_size_modal(a, a.child(f), memo); break;
    case ModalOp::Impl:
        s += tree_size_modal(a, a.left(f), memo) + tree_size_modal(a, a.right(f), memo);
        break;
    }
    memo.emplace(f.id, s);
    return s;
}

void collect_int(const FormulaArena& a, IntF f, FragmentReport& r,
                 std::set<std::uint32_t>& seen) {
    if (!seen.insert(f.id).second) return;
    switch (a.op(f)) {
    case IntOp::Bot: return;
    case IntOp::Var: r.variable_set.insert(a.name(f)); return;
    case IntOp::And:
    case IntOp::Or:
        r.implicational = false;
        collect_int(a, a.left(f), r, seen);
        collect_int(a, a.right(f), r, seen);
        return;
    case IntOp::Impl:
        collect_int(a, a.left(f), r, seen);
        collect_int(a, a.right(f), r, seen);
        return;
    }
}

void collect_modal(const FormulaArena& a, ModalF f, FragmentReport& r,
                   std::set<std::uint32_t>& seen) {
    if (!seen.insert(f.id).second) return;
    switch (a.op(f)) {
    case ModalOp::Bot: return;
    case ModalOp::Var: r.variable_set.insert(a.name(f)); return;
    case ModalOp::Box: collect_modal(a, a.child(f), r, seen); return;
    case ModalOp::Impl:
        collect_modal(a, a.left(f), r, seen);
        collect_modal(a, a.right(f), r, seen);
        return;
    }
}

bool strictly_impl(const FormulaArena& a, ModalF f,
                   std::unordered_map<std::uint32_t, bool>& memo) {
    auto it = memo.find(f.id);
    if (it != memo.end()) return it->second;
    bool ok = false;
    switch (a.op(f)) {
    case ModalOp::Bot:
    case ModalOp::Var: ok = true; break;
    case ModalOp::Impl: ok = false; break; // implication only directly under a box
    case ModalOp::Box: {
        ModalF c = a.child(f);
        ok = a.op(c) == ModalOp::Impl && strictly_impl(a, a.left(c), memo) &&
             strictly_impl(a, a.right(c), memo);
        break;
    }
    }
    memo.emplace(f.id, ok);
    return ok;
}

} // namespace

FragmentReport analyze(const FormulaArena& arena, IntF f) {
    FragmentReport r;
    r.implicational = true;
    std::set<std::uint32_t> seen;
    collect_int(arena, f, r, seen);
    r.variable_count = r.variable_set.size();
    std::unordered_map<std::uint32_t, std::uint64_t> memo;
    r.size = tree_size_int(arena, f, memo);
    r.strictly_implicational = false; // modal-only notion
    return r;
}

FragmentReport analyze(const FormulaArena& arena, ModalF f) {
    FragmentReport r;
    r.implicational = true; // the modal tree has no And/Or primitives
    std::set<std::uint32_t> seen;
    collect_modal(arena, f, r, seen);
    r.variable_count = r.variable_set.size();
    std::unordered_map<std::uint32_t, std::uint64_t> memo;
    r.size = tree_size_modal(arena, f, memo);
    std::unordered_map<std::uint32_t, bool> smemo;
    r.strictly_implicational = strictly_impl(arena, f, smemo);
    return r;
}

} // namespace imc
