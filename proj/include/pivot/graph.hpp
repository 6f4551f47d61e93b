#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pivot/label.hpp"
#include "pivot/labeled_matrix.hpp"

namespace pivot {

/// An undirected simple graph: no loops, no parallel edges. Immutable value;
/// edges are stored as sorted (min, max) label pairs.
class SimpleGraph {
public:
    explicit SimpleGraph(LabelSet vertices) : vertices_(std::move(vertices)) {}

    /// Validates endpoints (must be distinct, known vertices); duplicate edges
    /// collapse by set semantics.
    SimpleGraph(LabelSet vertices, const std::vector<std::pair<Label, Label>>& edges);

    const LabelSet& vertices() const { return vertices_; }
    const std::vector<std::pair<Label, Label>>& edges() const { return edges_; }

    bool has_edge(const Label& u, const Label& v) const;

    /// Graph with the (valid, non-loop) edge {u, v} toggled.
    SimpleGraph with_edge_toggled(const Label& u, const Label& v) const;

    bool operator==(const SimpleGraph& rhs) const = default;

private:
    LabelSet vertices_;
    std::vector<std::pair<Label, Label>> edges_;
};

/// N_G(v): all vertices adjacent to v (never contains v).
LabelSet neighborhood(const SimpleGraph& G, const Label& v);

/// G^v: every adjacency between two distinct neighbors of v is toggled;
/// everything else, including all edges at v, is unchanged.
SimpleGraph local_complement(const SimpleGraph& G, const Label& v);

/// Left-to-right composition of local complements.
SimpleGraph apply_lc_sequence(const SimpleGraph& G, const std::vector<Label>& seq);

/// A(G) over GF(2): symmetric, zero diagonal.
LabeledMatrix adjacency_matrix(const SimpleGraph& G);

/// The matrix ((A(G) + I_{v}) pivoted on {v}) + I_{N(v) + v}, which equals
/// adjacency_matrix(local_complement(G, v)). The pivot block is the 1x1
/// matrix [1], so the pivot is always defined.
LabeledMatrix lc_via_ppt(const SimpleGraph& G, const Label& v);

/// Rank over GF(2) of A(G)[X, V\X].
std::size_t cut_rank(const SimpleGraph& G, const LabelSet& X);

/// Cut ranks of all subsets, indexed by subset mask over canonical vertex
/// order. Throws SizeCapExceeded above the given cap.
std::vector<std::size_t> cut_rank_spectrum(const SimpleGraph& G, std::size_t cap = 12);

/// Whether the full cut-rank spectrum of G survives the sequence of local
/// complementations; true always.
bool check_cut_rank_invariance(const SimpleGraph& G, const std::vector<Label>& seq,
                               std::size_t cap = 12);

} // namespace pivot
