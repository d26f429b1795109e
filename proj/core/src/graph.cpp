#include "hamcheck/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hamcheck {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.row_words_ = n == 0 ? 1 : (n + 63) / 64;
    g.bits_.assign(static_cast<std::size_t>(std::max(n, 1)) * g.row_words_, 0);
    g.deg_.assign(std::max(n, 1), 0);
    g.deg_.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
        if (!g.has_edge(u, v)) g.add_edge_unchecked(u, v);
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    assert(n >= 0 && n <= 11);
    Graph g;
    g.n_ = n;
    g.row_words_ = 1;
    g.bits_.assign(std::max(n, 1), 0);
    g.deg_.assign(n, 0);
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if ((mask >> k) & 1ULL) g.add_edge_unchecked(u, v);
    return g;
}

void Graph::add_edge_unchecked(int u, int v) {
    bits_[static_cast<std::size_t>(u) * row_words_ + (v >> 6)] |= 1ULL << (v & 63);
    bits_[static_cast<std::size_t>(v) * row_words_ + (u >> 6)] |= 1ULL << (u & 63);
    ++deg_[u];
    ++deg_[v];
    ++m_;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : deg_[0];
    for (int v = 1; v < n_; ++v) d = std::min(d, deg_[v]);
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, deg_[v]);
    return d;
}

VertexSet Graph::neighbors(int v) const {
    VertexSet s(n_);
    const std::uint64_t* r = row(v);
    for (int w = 0; w < row_words_ && w < static_cast<int>(s.words().size()); ++w)
        s.words()[w] = r[w];
    return s;
}

std::vector<int> Graph::neighbor_list(int v) const {
    std::vector<int> out;
    out.reserve(degree(v));
    for_each_neighbor(v, [&](int w) { out.push_back(w); });
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for_each_neighbor(u, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

std::optional<int> distance(const Graph& g, int u, int v) {
    if (!g.valid_vertex(u) || !g.valid_vertex(v))
        throw std::invalid_argument("distance: vertex out of range");
    if (u == v) return 0;
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> queue;
    queue.reserve(g.vertex_count());
    dist[u] = 0;
    queue.push_back(u);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        int found = -1;
        g.for_each_neighbor(x, [&](int y) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                if (y == v) found = dist[y];
                queue.push_back(y);
            }
        });
        if (found >= 0) return found;
    }
    return std::nullopt;
}

VertexSet common_neighbors(const Graph& g, int u, int v) {
    if (!g.valid_vertex(u) || !g.valid_vertex(v))
        throw std::invalid_argument("common_neighbors: vertex out of range");
    if (u == v) throw std::invalid_argument("common_neighbors: u == v");
    VertexSet s = g.neighbors(u);
    s &= g.neighbors(v);
    if (s.contains(u)) s.erase(u);
    if (s.contains(v)) s.erase(v);
    return s;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    std::vector<int> ids = s.to_vector();
    std::vector<int> to_new(g.vertex_count(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) to_new[ids[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < ids.size(); ++i)
        g.for_each_neighbor(ids[i], [&](int w) {
            if (w > ids[i] && to_new[w] >= 0)
                edges.emplace_back(static_cast<int>(i), to_new[w]);
        });
    return {Graph::from_edges(static_cast<int>(ids.size()), edges), std::move(ids)};
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    VertexSet seen(n);
    std::vector<int> stack{0};
    seen.insert(0);
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        g.for_each_neighbor(x, [&](int y) {
            if (!seen.contains(y)) {
                seen.insert(y);
                ++count;
                stack.push_back(y);
            }
        });
    }
    return count == n;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet unseen = within;
    for (int s = unseen.first(); s >= 0; s = unseen.first()) {
        VertexSet comp(g.vertex_count());
        std::vector<int> stack{s};
        comp.insert(s);
        unseen.erase(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            g.for_each_neighbor(x, [&](int y) {
                if (unseen.contains(y)) {
                    unseen.erase(y);
                    comp.insert(y);
                    stack.push_back(y);
                }
            });
        }
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace hamcheck
