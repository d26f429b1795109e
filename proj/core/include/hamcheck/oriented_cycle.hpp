#pragma once

#include <span>
#include <vector>

#include "hamcheck/graph.hpp"
#include "hamcheck/vertex_set.hpp"

namespace hamcheck {

/// Cyclic sequence of at least 3 distinct vertices with a fixed orientation.
/// Provides the successor/predecessor/segment arithmetic used on oriented
/// cycles: v+, v-, v+2, v-2, the segment from u to v along the orientation,
/// and reversal.
class OrientedCycle {
public:
    /// Throws std::invalid_argument on length < 3, repeats, or negative ids.
    explicit OrientedCycle(std::vector<int> seq);

    int length() const { return static_cast<int>(seq_.size()); }
    const std::vector<int>& vertices() const { return seq_; }

    bool contains(int v) const {
        return v >= 0 && v < static_cast<int>(pos_.size()) && pos_[v] >= 0;
    }

    /// Index of v in the sequence. Throws if v is not on the cycle.
    int position(int v) const;

    /// Vertex at index i taken modulo the length (i may be negative).
    int at(int i) const {
        int m = length();
        return seq_[((i % m) + m) % m];
    }

    int successor(int v) const { return at(position(v) + 1); }
    int predecessor(int v) const { return at(position(v) - 1); }
    int second_successor(int v) const { return at(position(v) + 2); }
    int second_predecessor(int v) const { return at(position(v) - 2); }

    /// Vertices from u to v inclusive, along the orientation. segment(u, u)
    /// is the single vertex u.
    std::vector<int> segment(int u, int v) const;

    /// Same vertex set, orientation flipped.
    OrientedCycle reversed() const;

    VertexSet to_vertex_set(int universe) const;

    bool operator==(const OrientedCycle& o) const { return seq_ == o.seq_; }

private:
    std::vector<int> seq_;
    std::vector<int> pos_; // vertex id -> index in seq_, -1 if absent
};

/// True iff seq is a genuine cycle of g: >= 3 distinct valid vertices and
/// every consecutive pair (cyclically) an edge.
bool is_valid_cycle(const Graph& g, std::span<const int> seq);
bool is_valid_cycle(const Graph& g, const OrientedCycle& c);

/// Canonical representative among the rotations and reflections of a cycle:
/// starts at the smallest vertex, second element smaller than the last.
std::vector<int> canonical_cycle(std::span<const int> seq);

} // namespace hamcheck
