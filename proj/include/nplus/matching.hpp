#pragma once

#include "nplus/multigraph.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace nplus {

/// Pairwise non-incident edges, identified by edge id.
struct Matching {
    std::vector<EdgeId> edges;

    int size() const { return static_cast<int>(edges.size()); }
};

namespace detail {

// Edmonds' blossom-shrinking augmenting path search on a simple adjacency structure.
class BlossomMatcher {
public:
    explicit BlossomMatcher(std::vector<std::vector<int>> adj)
        : n_(static_cast<int>(adj.size())), adj_(std::move(adj)), match_(static_cast<std::size_t>(n_), -1),
          parent_(static_cast<std::size_t>(n_)), base_(static_cast<std::size_t>(n_)), used_(static_cast<std::size_t>(n_)),
          blossom_(static_cast<std::size_t>(n_)) {}

    const std::vector<int>& run() {
        // Greedy start keeps the number of augmentations small.
        for (int v = 0; v < n_; ++v) {
            if (match_[idx(v)] >= 0) continue;
            for (int w : adj_[idx(v)])
                if (match_[idx(w)] < 0) {
                    match_[idx(v)] = w;
                    match_[idx(w)] = v;
                    break;
                }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[idx(v)] >= 0) continue;
            int end = find_path(v);
            while (end >= 0) {
                int pv = parent_[idx(end)];
                int ppv = match_[idx(pv)];
                match_[idx(end)] = pv;
                match_[idx(pv)] = end;
                end = ppv;
            }
        }
        return match_;
    }

private:
    static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

    int lca(int a, int b) {
        std::vector<char> seen(idx(n_), 0);
        for (;;) {
            a = base_[idx(a)];
            seen[idx(a)] = 1;
            if (match_[idx(a)] < 0) break;
            a = parent_[idx(match_[idx(a)])];
        }
        for (;;) {
            b = base_[idx(b)];
            if (seen[idx(b)]) return b;
            b = parent_[idx(match_[idx(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[idx(v)] != b) {
            blossom_[idx(base_[idx(v)])] = 1;
            blossom_[idx(base_[idx(match_[idx(v)])])] = 1;
            parent_[idx(v)] = child;
            child = match_[idx(v)];
            v = parent_[idx(match_[idx(v)])];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[idx(i)] = i;
        used_[idx(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[idx(v)]) {
                if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
                if (to == root || (match_[idx(to)] >= 0 && parent_[idx(match_[idx(to)])] >= 0)) {
                    int cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!blossom_[idx(base_[idx(i)])]) continue;
                        base_[idx(i)] = cur;
                        if (!used_[idx(i)]) {
                            used_[idx(i)] = 1;
                            q.push(i);
                        }
                    }
                } else if (parent_[idx(to)] < 0) {
                    parent_[idx(to)] = v;
                    if (match_[idx(to)] < 0) return to;
                    used_[idx(match_[idx(to)])] = 1;
                    q.push(match_[idx(to)]);
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;
};

inline std::vector<int> mate_vector(const Multigraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
    return BlossomMatcher(std::move(adj)).run();
}

} // namespace detail

/// Maximum-cardinality matching. Runs on the underlying simple graph; each matched pair is
/// reported through its lowest edge id.
inline Matching maximum_matching(const Multigraph& g) {
    const auto mate = detail::mate_vector(g);
    Matching m;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        NodeId v = mate[static_cast<std::size_t>(u)];
        if (v < u) continue;
        EdgeId best = -1;
        for (EdgeId id : g.incident_edges(u))
            if (g.edge(id).other(u) == v && (best < 0 || id < best)) best = id;
        m.edges.push_back(best);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

/// The empty graph has a (vacuous) perfect matching.
inline bool has_perfect_matching(const Multigraph& g) {
    if (g.node_count() % 2 == 1) return false;
    const auto mate = detail::mate_vector(g);
    return std::none_of(mate.begin(), mate.end(), [](int m) { return m < 0; });
}

/// Node v such that g - v has no perfect matching, or -1 when g is hypomatchable.
inline NodeId hypomatchability_violation(const Multigraph& g) {
    if (g.node_count() == 0) return -1;
    if (g.node_count() % 2 == 0) return 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!has_perfect_matching(remove_node(g, v))) return v;
    return -1;
}

/// Odd order and g - v has a perfect matching for every node v. A single node qualifies.
inline bool is_hypomatchable(const Multigraph& g) {
    return g.node_count() % 2 == 1 && hypomatchability_violation(g) < 0;
}

} // namespace nplus
