#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hamcheck/vertex_set.hpp"

namespace hamcheck {

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bitset row per vertex (a single 64-bit word
/// when n <= 64, growing as needed for larger graphs), with a per-vertex
/// degree cache. All neighbor iteration is in ascending vertex id order.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    /// Throws std::invalid_argument on out-of-range ids or self-loops.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    /// Builds a graph on n <= 11 vertices from a bitmask over vertex pairs.
    /// Bit k of `mask` is pair k in column-major upper-triangle order:
    /// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... — the graph6 bit order.
    static Graph from_edge_mask(int n, std::uint64_t mask);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        assert(valid_vertex(u) && valid_vertex(v));
        return (bits_[static_cast<std::size_t>(u) * row_words_ + (v >> 6)] >> (v & 63)) & 1ULL;
    }

    int degree(int v) const {
        assert(valid_vertex(v));
        return deg_[v];
    }

    int min_degree() const;
    int max_degree() const;

    /// Neighborhood N(v) as a VertexSet copy.
    VertexSet neighbors(int v) const;

    std::vector<int> neighbor_list(int v) const;

    /// Edges as ascending (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet vertex_set() const { return VertexSet::full(n_); }

    bool valid_vertex(int v) const { return v >= 0 && v < n_; }

    int row_words() const { return row_words_; }
    const std::uint64_t* row(int v) const {
        assert(valid_vertex(v));
        return bits_.data() + static_cast<std::size_t>(v) * row_words_;
    }

    /// Ascending neighbor traversal without materializing a list.
    template <typename F>
    void for_each_neighbor(int v, F&& f) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < row_words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                f(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }

private:
    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    int m_ = 0;
    int row_words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> deg_;
};

/// Index of pair (u, v) in the column-major upper-triangle order used by
/// Graph::from_edge_mask and the graph6 encoding.
inline int pair_index(int u, int v) {
    assert(u != v);
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
}

/// BFS hop count from u to v; std::nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, int u, int v);

/// N(u) ∩ N(v), excluding u and v themselves. Throws on u == v.
VertexSet common_neighbors(const Graph& g, int u, int v);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_ids; // new id -> original id, ascending
};

/// Subgraph induced by s, vertices relabeled 0..|s|-1 in ascending id order.
/// Throws on empty s.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

/// Connected components of the subgraph induced by `within`, each returned
/// as a VertexSet over the full universe, ordered by smallest member.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);

} // namespace hamcheck
