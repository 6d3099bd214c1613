#include "imc/agap.hpp"

#include <algorithm>
#include <sstream>

namespace imc {

namespace {

std::size_t checked_index(std::size_t v, std::size_t n, const char* what) {
    if (v >= n) throw InputError(std::string("invalid node index for ") + what);
    return v;
}

void insert_sorted(std::vector<std::size_t>& v, std::size_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

} // namespace

// --------------------------------------------------------------------------
// AlternatingGraph
// --------------------------------------------------------------------------

std::size_t AlternatingGraph::add_node(std::string name, NodeKind kind) {
    if (!valid_state_name(name))
        throw InputError("invalid node name: '" + name + "'");
    if (index_of(name))
        throw InputError("duplicate node name: '" + name + "'");
    names_.push_back(std::move(name));
    kinds_.push_back(kind);
    succ_.emplace_back();
    return names_.size() - 1;
}

void AlternatingGraph::add_edge(std::size_t from, std::size_t to) {
    checked_index(from, size(), "edge source");
    checked_index(to, size(), "edge target");
    if (kinds_[from] == kinds_[to])
        throw InputError("edge joins two nodes of the same kind: '" + names_[from] +
                         "' -> '" + names_[to] + "'");
    insert_sorted(succ_[from], to);
}

bool AlternatingGraph::has_edge(std::size_t from, std::size_t to) const {
    const auto& s = succ_[from];
    return std::binary_search(s.begin(), s.end(), to);
}

std::optional<std::size_t> AlternatingGraph::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::size_t AlternatingGraph::require_index(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw InputError("unknown node: '" + std::string(name) + "'");
    return *i;
}

// --------------------------------------------------------------------------
// SliceGraph
// --------------------------------------------------------------------------

void SliceGraph::set_num_slices(std::size_t m) {
    if (m < slices_.size())
        throw InputError("cannot shrink the slice count");
    slices_.resize(m);
}

std::size_t SliceGraph::add_node(std::string name, std::size_t slice) {
    if (slice == 0 || slice > slices_.size())
        throw InputError("slice index out of range for node '" + name + "'");
    if (!valid_state_name(name))
        throw InputError("invalid node name: '" + name + "'");
    if (index_of(name))
        throw InputError("duplicate node name: '" + name + "'");
    names_.push_back(std::move(name));
    slice_of_.push_back(slice);
    succ_.emplace_back();
    slices_[slice - 1].push_back(names_.size() - 1);
    return names_.size() - 1;
}

void SliceGraph::add_edge(std::size_t from, std::size_t to) {
    checked_index(from, size(), "edge source");
    checked_index(to, size(), "edge target");
    insert_sorted(succ_[from], to);
}

bool SliceGraph::has_edge(std::size_t from, std::size_t to) const {
    const auto& s = succ_[from];
    return std::binary_search(s.begin(), s.end(), to);
}

std::optional<std::size_t> SliceGraph::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::size_t SliceGraph::require_index(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw InputError("unknown node: '" + std::string(name) + "'");
    return *i;
}

// --------------------------------------------------------------------------
// Validation
// --------------------------------------------------------------------------

SliceGraphReport validate_slice_graph(const SliceGraph& g) {
    const std::size_t m = g.num_slices();
    if (m < 2) return {false, "need at least two slices"};
    if (m % 2 != 0)
        return {false, "slice count must be even (last slice universal)"};
    for (std::size_t i = 1; i <= m; ++i)
        if (g.nodes_in_slice(i).empty())
            return {false, "slice " + std::to_string(i) + " is empty"};
    for (std::size_t v = 0; v < g.size(); ++v) {
        for (std::size_t w : g.successors(v)) {
            if (g.slice_of(w) != g.slice_of(v) + 1)
                return {false, "edge " + g.name(v) + " -> " + g.name(w) +
                                   " does not go to the next slice"};
        }
        if (g.slice_of(v) != m && g.successors(v).empty())
            return {false, "node " + g.name(v) + " outside the last slice has outdegree 0"};
    }
    return {true, ""};
}

void require_valid(const AsAgapInstance& inst) {
    SliceGraphReport r = validate_slice_graph(inst.graph);
    if (!r.valid) throw InputError("invalid slice graph: " + r.first_violation);
    if (inst.source >= inst.graph.size() || inst.target >= inst.graph.size())
        throw InputError("source/target out of range");
    if (inst.graph.slice_of(inst.source) != 1)
        throw InputError("source must lie in the first slice");
    if (inst.graph.slice_of(inst.target) != inst.graph.num_slices())
        throw InputError("target must lie in the last slice");
}

// --------------------------------------------------------------------------
// apath
// --------------------------------------------------------------------------

namespace {

// Kleene iteration of the least fixpoint. `literal` switches the universal
// clause to the vacuous reading (a successor-less universal node reaches
// everything) used only for divergence diagnostics.
template <typename Graph>
Bits apath_fixpoint(const Graph& g, std::size_t y, bool literal) {
    const std::size_t n = g.size();
    checked_index(y, n, "apath target");
    Bits reach(n);
    reach.set(y);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < n; ++x) {
            if (reach[x]) continue;
            const auto& succ = g.successors(x);
            bool holds;
            if (g.kind(x) == NodeKind::Existential) {
                holds = std::any_of(succ.begin(), succ.end(),
                                    [&](std::size_t z) { return reach[z]; });
            } else if (succ.empty()) {
                holds = literal;
            } else {
                holds = std::all_of(succ.begin(), succ.end(),
                                    [&](std::size_t z) { return reach[z]; });
            }
            if (holds) {
                reach.set(x);
                changed = true;
            }
        }
    }
    return reach;
}

} // namespace

Bits apath_to(const AlternatingGraph& g, std::size_t y) {
    return apath_fixpoint(g, y, false);
}

Bits apath_to_literal(const AlternatingGraph& g, std::size_t y) {
    return apath_fixpoint(g, y, true);
}

Bits apath_to(const SliceGraph& g, std::size_t y) {
    // Backward dynamic program: slice i only depends on slice i+1.
    const std::size_t n = g.size();
    checked_index(y, n, "apath target");
    Bits reach(n);
    const std::size_t m = g.num_slices();
    for (std::size_t i = m; i >= 1; --i) {
        for (std::size_t v : g.nodes_in_slice(i)) {
            if (v == y) {
                reach.set(v);
                continue;
            }
            const auto& succ = g.successors(v);
            if (succ.empty()) continue; // sink convention: reaches only itself
            bool holds;
            if (g.kind(v) == NodeKind::Existential)
                holds = std::any_of(succ.begin(), succ.end(),
                                    [&](std::size_t z) { return reach[z]; });
            else
                holds = std::all_of(succ.begin(), succ.end(),
                                    [&](std::size_t z) { return reach[z]; });
            if (holds) reach.set(v);
        }
    }
    return reach;
}

Bits apath_to_literal(const SliceGraph& g, std::size_t y) {
    return apath_fixpoint(g, y, true);
}

bool apath(const AlternatingGraph& g, std::size_t x, std::size_t y) {
    checked_index(x, g.size(), "apath source");
    return apath_to(g, y)[x];
}

bool apath(const SliceGraph& g, std::size_t x, std::size_t y) {
    checked_index(x, g.size(), "apath source");
    return apath_to(g, y)[x];
}

AlternatingGraph to_alternating(const SliceGraph& g) {
    AlternatingGraph out;
    for (std::size_t v = 0; v < g.size(); ++v) out.add_node(g.name(v), g.kind(v));
    for (std::size_t v = 0; v < g.size(); ++v)
        for (std::size_t w : g.successors(v)) out.add_edge(v, w);
    return out;
}

// --------------------------------------------------------------------------
// Padding reduction
// --------------------------------------------------------------------------

AsAgapInstance agap_to_asagap(const AgapInstance& inst) {
    const AlternatingGraph& g = inst.graph;
    const std::size_t n = g.size();
    if (n == 0) throw InputError("empty alternating graph");
    checked_index(inst.source, n, "source");
    checked_index(inst.target, n, "target");

    const std::size_t m = 2 * n;
    AsAgapInstance out;
    out.graph.set_num_slices(m);

    // Node <v,i> for every input node v and slice i.
    std::vector<std::vector<std::size_t>> id(m + 1, std::vector<std::size_t>(n));
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t v = 0; v < n; ++v)
            id[i][v] = out.graph.add_node(g.name(v) + "@" + std::to_string(i), i);

    const std::size_t t = inst.target;
    for (std::size_t i = 1; i < m; ++i) {
        const NodeKind active = i % 2 == 1 ? NodeKind::Existential : NodeKind::Universal;
        for (std::size_t v = 0; v < n; ++v) {
            const bool copies_edges = g.kind(v) == active && v != t;
            if (copies_edges && !g.successors(v).empty()) {
                for (std::size_t w : g.successors(v))
                    out.graph.add_edge(id[i][v], id[i + 1][w]);
            } else {
                // Inactive kind, the target, or an active-kind sink: self-copy.
                // The sink case keeps outdegree positive; its chain ends in a
                // non-target last-slice node and thus stays false, matching
                // the sink convention on the input side.
                out.graph.add_edge(id[i][v], id[i + 1][v]);
            }
        }
    }

    out.source = id[1][inst.source];
    out.target = id[m][t];
    return out;
}

// --------------------------------------------------------------------------
// Pseudo-transitive closure
// --------------------------------------------------------------------------

Relation pseudo_transitive_closure(const SliceGraph& g) {
    SliceGraphReport r = validate_slice_graph(g);
    if (!r.valid) throw InputError("invalid slice graph: " + r.first_violation);
    const std::size_t n = g.size();
    Relation rel = make_relation(n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w : g.successors(v)) rel[v].set(w);
    const std::size_t m = g.num_slices();
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t i = g.slice_of(v);
        for (std::size_t j = i + 2; j <= m; ++j)
            for (std::size_t w : g.nodes_in_slice(j)) rel[v].set(w);
    }
    return rel;
}

} // namespace imc
