#ifndef RRR_GRAPH_HPP
#define RRR_GRAPH_HPP

#include <span>
#include <utility>
#include <vector>

#include "rrr/errors.hpp"

namespace rrr {

using VertexPair = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1.  Immutable after construction;
// edges are stored normalized (u < v) and sorted, adjacency in CSR form.
class Graph {
public:
    // Validates the edge list: rejects loops, out-of-range endpoints and
    // duplicate edges.
    Graph(int n, const std::vector<VertexPair>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }

    int degree(int v) const {
        check_vertex(v);
        return offsets_[v + 1] - offsets_[v];
    }
    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return {adjacency_.data() + offsets_[v],
                static_cast<size_t>(offsets_[v + 1] - offsets_[v])};
    }
    bool has_edge(int u, int v) const;

    bool is_connected() const;
    bool is_unicyclic() const { return is_connected() && edge_count() == n_; }
    std::vector<int> pendant_vertices() const;

    // Graph on n-1 vertices with v and its incident edges removed; the
    // remaining vertices are relabeled 0..n-2 preserving their order.
    Graph delete_vertex(int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw VertexOutOfRangeError("vertex " + std::to_string(v) + " not in 0.." +
                                        std::to_string(n_ - 1));
    }
    void build_adjacency();

    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<int> offsets_;
    std::vector<int> adjacency_;
};

}  // namespace rrr

#endif
