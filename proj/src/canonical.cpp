#include "rrr/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "rrr/io.hpp"

namespace rrr {

namespace {

constexpr int kMaxCanonN = 64;

using Partition = std::vector<std::vector<int>>;

struct Canonicalizer {
    int n;
    std::array<std::uint64_t, kMaxCanonN> adj{};  // adjacency bit rows
    std::string best_enc;
    std::vector<int> best_perm;  // old label -> canonical label
    bool have_best = false;

    explicit Canonicalizer(const Graph& g) : n(g.vertex_count()) {
        for (const auto& [u, v] : g.edges()) {
            adj[u] |= std::uint64_t{1} << v;
            adj[v] |= std::uint64_t{1} << u;
        }
    }

    // Equitable refinement.  Cells split by the sorted multiset of neighbor
    // colors; sub-cells are ordered by signature, so the resulting ordered
    // partition depends only on the isomorphism class and the incoming order.
    void refine(Partition& p) const {
        std::vector<int> color(n);
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t ci = 0; ci < p.size(); ++ci)
                for (int v : p[ci]) color[v] = static_cast<int>(ci);
            Partition next;
            next.reserve(p.size());
            for (const auto& cell : p) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> sig;
                    std::uint64_t m = adj[v];
                    while (m) {
                        int w = std::countr_zero(m);
                        m &= m - 1;
                        sig.push_back(color[w]);
                    }
                    std::sort(sig.begin(), sig.end());
                    keyed.emplace_back(std::move(sig), v);
                }
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                size_t i = 0;
                while (i < keyed.size()) {
                    size_t j = i;
                    std::vector<int> sub;
                    while (j < keyed.size() && keyed[j].first == keyed[i].first)
                        sub.push_back(keyed[j++].second);
                    if (sub.size() != cell.size()) changed = true;
                    next.push_back(std::move(sub));
                    i = j;
                }
            }
            p = std::move(next);
        }
    }

    // Within one cell, u and w are interchangeable when swapping them is an
    // automorphism; branching on one representative per class is enough.
    std::vector<int> twin_representatives(const std::vector<int>& cell) const {
        std::vector<int> reps;
        for (size_t i = 0; i < cell.size(); ++i) {
            bool dup = false;
            int u = cell[i];
            for (size_t j = 0; j < i && !dup; ++j) {
                int w = cell[j];
                std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << w));
                dup = (adj[u] & mask) == (adj[w] & mask);
            }
            if (!dup) reps.push_back(u);
        }
        return reps;
    }

    void leaf(const Partition& p) {
        std::vector<int> perm(n), inv(n);
        for (int i = 0; i < n; ++i) {
            perm[p[i][0]] = i;
            inv[i] = p[i][0];
        }
        std::string enc((static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
        size_t bit = 0;
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i, ++bit) {
                if ((adj[inv[i]] >> inv[j]) & 1)
                    enc[bit / 8] |= static_cast<char>(0x80 >> (bit % 8));
            }
        }
        if (!have_best || enc < best_enc) {
            best_enc = std::move(enc);
            best_perm = std::move(perm);
            have_best = true;
        }
    }

    void search(Partition p) {
        refine(p);
        auto target = std::find_if(p.begin(), p.end(),
                                   [](const auto& c) { return c.size() > 1; });
        if (target == p.end()) {
            leaf(p);
            return;
        }
        size_t ti = static_cast<size_t>(target - p.begin());
        for (int v : twin_representatives(*target)) {
            Partition q;
            q.reserve(p.size() + 1);
            for (size_t i = 0; i < p.size(); ++i) {
                if (i != ti) {
                    q.push_back(p[i]);
                    continue;
                }
                q.push_back({v});
                std::vector<int> rest;
                for (int w : p[i])
                    if (w != v) rest.push_back(w);
                q.push_back(std::move(rest));
            }
            search(std::move(q));
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    if (g.vertex_count() > kMaxCanonN)
        throw TooLargeError("canonical labeling supports at most 64 vertices");
    Canonicalizer c(g);
    std::vector<int> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    c.search(Partition{all});
    return c.best_perm;
}

CanonicalCertificate canonical_certificate(const Graph& g) {
    std::vector<int> perm = canonical_labeling(g);
    std::vector<VertexPair> relabeled;
    relabeled.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) relabeled.emplace_back(perm[u], perm[v]);
    return CanonicalCertificate{to_graph6(Graph(g.vertex_count(), relabeled))};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace rrr
