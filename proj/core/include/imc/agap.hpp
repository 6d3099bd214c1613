#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "imc/kripke.hpp"

namespace imc {

enum class NodeKind { Existential, Universal };

// General alternating graph. Edges must join nodes of opposite kind.
class AlternatingGraph {
public:
    // InputError on duplicate or token-unsafe names.
    std::size_t add_node(std::string name, NodeKind kind);
    // InputError when the endpoint kinds coincide or indices are invalid.
    void add_edge(std::size_t from, std::size_t to);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t v) const { return names_[v]; }
    NodeKind kind(std::size_t v) const { return kinds_[v]; }
    const std::vector<std::size_t>& successors(std::size_t v) const { return succ_[v]; }
    bool has_edge(std::size_t from, std::size_t to) const;
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require_index(std::string_view name) const; // InputError

private:
    std::vector<std::string> names_;
    std::vector<NodeKind> kinds_;
    std::vector<std::vector<std::size_t>> succ_;
};

// Alternating slice graph: ordered partition V1..Vm; node kinds are derived —
// odd slices existential, even slices universal. Structural invariants are
// checked by validate_slice_graph, not at construction.
class SliceGraph {
public:
    void set_num_slices(std::size_t m);
    // `slice` is 1-based and must be within the declared slice count.
    std::size_t add_node(std::string name, std::size_t slice);
    void add_edge(std::size_t from, std::size_t to);

    std::size_t size() const { return names_.size(); }
    std::size_t num_slices() const { return slices_.size(); }
    const std::string& name(std::size_t v) const { return names_[v]; }
    std::size_t slice_of(std::size_t v) const { return slice_of_[v]; } // 1-based
    NodeKind kind(std::size_t v) const {
        return slice_of_[v] % 2 == 1 ? NodeKind::Existential : NodeKind::Universal;
    }
    const std::vector<std::size_t>& nodes_in_slice(std::size_t i) const { return slices_[i - 1]; }
    const std::vector<std::size_t>& successors(std::size_t v) const { return succ_[v]; }
    bool has_edge(std::size_t from, std::size_t to) const;
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require_index(std::string_view name) const; // InputError

private:
    std::vector<std::string> names_;
    std::vector<std::size_t> slice_of_;
    std::vector<std::vector<std::size_t>> slices_;
    std::vector<std::vector<std::size_t>> succ_;
};

struct AgapInstance {
    AlternatingGraph graph;
    std::size_t source = 0;
    std::size_t target = 0;
};

struct AsAgapInstance {
    SliceGraph graph;
    std::size_t source = 0;
    std::size_t target = 0;
};

struct SliceGraphReport {
    bool valid = true;
    std::string first_violation; // empty when valid
};

// Checks: at least two slices and an even count; no empty slice; every edge
// goes from some slice i to slice i+1; every node outside the last slice has
// outdegree > 0.
SliceGraphReport validate_slice_graph(const SliceGraph& g);

// Graph valid, source in V1, target in Vm. Throws InputError otherwise.
void require_valid(const AsAgapInstance& inst);

// Alternating reachability under the sink convention: a node with no
// successors reaches exactly itself, for both kinds. Otherwise an existential
// node needs some successor that reaches y, a universal node needs all of its
// successors to.
bool apath(const AlternatingGraph& g, std::size_t x, std::size_t y);
bool apath(const SliceGraph& g, std::size_t x, std::size_t y);
Bits apath_to(const AlternatingGraph& g, std::size_t y); // Kleene iteration
Bits apath_to(const SliceGraph& g, std::size_t y);       // backward slice DP

// The literal reading of the universal clause (a universal node with no
// successors vacuously reaches everything). Used only to flag inputs whose
// answer depends on the convention; never used by the reductions.
Bits apath_to_literal(const AlternatingGraph& g, std::size_t y);
Bits apath_to_literal(const SliceGraph& g, std::size_t y);

// Forgets the slicing, keeping names, derived kinds and edges.
AlternatingGraph to_alternating(const SliceGraph& g);

// Padding reduction: output has m = 2n slices over nodes <v,i> named "v@i".
// At odd slices existential non-target nodes copy their edges and
// universal-or-target nodes self-copy (dually at even slices); a node of the
// active kind with no successors also self-copies, so every non-last-slice
// node keeps outdegree > 0. Preserves the apath answer; source <s,1>,
// target <t,m>.
AsAgapInstance agap_to_asagap(const AgapInstance& inst);

// E' := E plus every edge jumping at least two slices forward.
// InputError when the slice graph is invalid. The result is transitive and
// contains the transitive closure of E.
Relation pseudo_transitive_closure(const SliceGraph& g);

} // namespace imc
