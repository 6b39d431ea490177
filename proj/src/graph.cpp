#include "rrr/graph.hpp"

#include <algorithm>
#include <string>

namespace rrr {

Graph::Graph(int n, const std::vector<VertexPair>& edge_list) : n_(n) {
    if (n < 1) throw VertexOutOfRangeError("graph needs at least one vertex");
    edges_.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
        if (a == b) throw LoopEdgeError("loop edge at vertex " + std::to_string(a));
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw VertexOutOfRangeError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") out of range for n=" + std::to_string(n));
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw DuplicateEdgeError("duplicate edge (" + std::to_string(dup->first) + "," +
                                 std::to_string(dup->second) + ")");
    build_adjacency();
}

void Graph::build_adjacency() {
    offsets_.assign(static_cast<size_t>(n_) + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(2 * edges_.size());
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adjacency_[fill[u]++] = v;
        adjacency_[fill[v]++] = u;
    }
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    for (int w : neighbors(u))
        if (w == v) return true;
    return false;
}

bool Graph::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n_;
}

std::vector<int> Graph::pendant_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    if (n_ == 1) throw VertexOutOfRangeError("cannot delete the only vertex");
    std::vector<VertexPair> kept;
    kept.reserve(edges_.size());
    for (const auto& [a, b] : edges_) {
        if (a == v || b == v) continue;
        kept.emplace_back(a - (a > v ? 1 : 0), b - (b > v ? 1 : 0));
    }
    return Graph(n_ - 1, kept);
}

}  // namespace rrr
