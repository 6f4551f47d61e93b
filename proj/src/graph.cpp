#include "pivot/graph.hpp"

#include <algorithm>

#include "pivot/errors.hpp"
#include "pivot/ppt.hpp"
#include "elim.hpp"

namespace pivot {

namespace {

std::pair<Label, Label> normalized(const Label& u, const Label& v) {
    return u < v ? std::pair{u, v} : std::pair{v, u};
}

} // namespace

SimpleGraph::SimpleGraph(LabelSet vertices, const std::vector<std::pair<Label, Label>>& edges)
    : vertices_(std::move(vertices)) {
    edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        (void)vertices_.index_of(u);
        (void)vertices_.index_of(v);
        if (u == v) throw Error("loop at vertex '" + u.name() + "' is not allowed");
        edges_.push_back(normalized(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool SimpleGraph::has_edge(const Label& u, const Label& v) const {
    if (u == v) return false;
    return std::binary_search(edges_.begin(), edges_.end(), normalized(u, v));
}

SimpleGraph SimpleGraph::with_edge_toggled(const Label& u, const Label& v) const {
    SimpleGraph out = *this;
    auto e = normalized(u, v);
    auto it = std::lower_bound(out.edges_.begin(), out.edges_.end(), e);
    if (it != out.edges_.end() && *it == e)
        out.edges_.erase(it);
    else
        out.edges_.insert(it, e);
    return out;
}

LabelSet neighborhood(const SimpleGraph& G, const Label& v) {
    (void)G.vertices().index_of(v);
    std::vector<Label> out;
    for (const auto& [a, b] : G.edges()) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return LabelSet(std::move(out));
}

SimpleGraph local_complement(const SimpleGraph& G, const Label& v) {
    LabelSet N = neighborhood(G, v);
    SimpleGraph out = G;
    for (std::size_t i = 0; i < N.size(); ++i)
        for (std::size_t j = i + 1; j < N.size(); ++j)
            out = out.with_edge_toggled(N.at(i), N.at(j));
    return out;
}

SimpleGraph apply_lc_sequence(const SimpleGraph& G, const std::vector<Label>& seq) {
    SimpleGraph out = G;
    for (const Label& v : seq) out = local_complement(out, v);
    return out;
}

LabeledMatrix adjacency_matrix(const SimpleGraph& G) {
    const FieldDescriptor gf2 = FieldDescriptor::gf2();
    LabeledMatrix A(gf2, G.vertices(), G.vertices());
    for (const auto& [u, v] : G.edges()) {
        A.set(u, v, FieldValue::one(gf2));
        A.set(v, u, FieldValue::one(gf2));
    }
    return A;
}

LabeledMatrix lc_via_ppt(const SimpleGraph& G, const Label& v) {
    const FieldDescriptor gf2 = FieldDescriptor::gf2();
    const LabelSet& V = G.vertices();
    LabelSet vset({v});
    LabeledMatrix shifted = adjacency_matrix(G) + LabeledMatrix::identity_on(vset, V, gf2);
    LabelSet closed = neighborhood(G, v).set_union(vset);
    return ppt(shifted, vset) + LabeledMatrix::identity_on(closed, V, gf2);
}

std::size_t cut_rank(const SimpleGraph& G, const LabelSet& X) {
    return adjacency_matrix(G).submatrix(X, G.vertices().set_difference(X)).rank();
}

std::vector<std::size_t> cut_rank_spectrum(const SimpleGraph& G, std::size_t cap) {
    const std::size_t n = G.vertices().size();
    if (n > cap)
        throw SizeCapExceeded("cut-rank spectrum over " + std::to_string(n) +
                              " vertices exceeds the cap " + std::to_string(cap));
    std::vector<std::uint64_t> rows = detail::to_bit_rows(adjacency_matrix(G));
    const std::uint64_t lim = std::uint64_t(1) << n;
    std::vector<std::size_t> spectrum(lim, 0);
    std::vector<std::uint64_t> scratch;
    scratch.reserve(n);
    for (std::uint64_t x = 0; x < lim; ++x) {
        const std::uint64_t complement = ~x & (lim - 1);
        scratch.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (x & (std::uint64_t(1) << i)) scratch.push_back(rows[i] & complement);
        spectrum[x] = detail::rank_bits(scratch);
    }
    return spectrum;
}

bool check_cut_rank_invariance(const SimpleGraph& G, const std::vector<Label>& seq,
                               std::size_t cap) {
    return cut_rank_spectrum(G, cap) == cut_rank_spectrum(apply_lc_sequence(G, seq), cap);
}

} // namespace pivot
