#pragma once

#include "nplus/isomorphism.hpp"
#include "nplus/matching.hpp"
#include "nplus/multigraph.hpp"

#include <random>
#include <unordered_set>
#include <vector>

namespace nplus {

/// pm[S] says whether the subgraph induced by node mask S has a perfect matching, by pairing
/// the lowest node of S with each neighbour in turn. Exponential; for small n only.
inline std::vector<char> perfect_matchable_subsets(const Multigraph& g) {
    const int n = g.node_count();
    if (n > 20) throw ResourceError("subset matching table limited to 20 nodes");
    std::vector<NodeMask> nbr;
    for (NodeId v = 0; v < n; ++v) nbr.push_back(g.neighbor_mask(v));
    std::vector<char> pm(std::size_t{1} << n, 0);
    pm[0] = 1;
    for (NodeMask s = 1; s < (NodeMask{1} << n); ++s) {
        if (std::popcount(s) % 2) continue;
        const int v = std::countr_zero(s);
        const NodeMask rest = s & (s - 1);
        for (NodeMask c = nbr[static_cast<std::size_t>(v)] & rest; c; c &= c - 1)
            if (pm[rest & ~(c & (~c + 1))]) {
                pm[s] = 1;
                break;
            }
    }
    return pm;
}

/// Hypomatchability through the subset table, independent of the blossom matcher.
inline bool hypomatchable_by_subsets(const Multigraph& g) {
    const int n = g.node_count();
    if (n % 2 == 0) return false;
    const auto pm = perfect_matchable_subsets(g);
    const NodeMask all = all_nodes_mask(n);
    for (NodeId v = 0; v < n; ++v)
        if (!pm[all & ~(NodeMask{1} << v)]) return false;
    return true;
}

namespace detail {

inline bool connected_mask(const std::vector<NodeMask>& nbr, NodeMask s) {
    if (!s) return true;
    NodeMask seen = s & (~s + 1), frontier = seen;
    while (frontier) {
        NodeMask next = 0;
        for (NodeMask f = frontier; f; f &= f - 1) next |= nbr[static_cast<std::size_t>(std::countr_zero(f))] & s;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == s;
}

} // namespace detail

/// Mask-based 2-connectivity for small graphs.
inline bool two_connected_by_masks(const Multigraph& g) {
    const int n = g.node_count();
    if (n < 2) return false;
    std::vector<NodeMask> nbr;
    for (NodeId v = 0; v < n; ++v) nbr.push_back(g.neighbor_mask(v));
    const NodeMask all = all_nodes_mask(n);
    if (!detail::connected_mask(nbr, all)) return false;
    for (NodeId v = 0; v < n; ++v)
        if (!detail::connected_mask(nbr, all & ~(NodeMask{1} << v))) return false;
    return true;
}

/// All simple graphs on exactly n nodes, one per isomorphism class. Built by adding a node
/// with every possible neighbourhood to each class on n-1 nodes; `keep` filters the final
/// level only.
template <class Keep>
std::vector<Multigraph> simple_graphs(int n, Keep&& keep) {
    if (n < 0) throw InputError("node count must be nonnegative");
    std::vector<Multigraph> level{Multigraph(0)};
    for (int size = 1; size <= n; ++size) {
        std::vector<Multigraph> next;
        std::unordered_set<std::string> seen;
        const int old = size - 1;
        for (const Multigraph& g : level) {
            for (NodeMask nb = 0; nb < (NodeMask{1} << old); ++nb) {
                Multigraph h(size);
                for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
                for (NodeMask r = nb; r; r &= r - 1) h.add_edge(std::countr_zero(r), old);
                if (size == n && !keep(h)) continue;
                if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    return level;
}

inline std::vector<Multigraph> simple_graphs(int n) {
    return simple_graphs(n, [](const Multigraph&) { return true; });
}

/// Every way of doubling at most `max_doubled` edges of each input graph, deduplicated up to
/// isomorphism (multiplicities respected). Inputs are taken as simple.
inline std::vector<Multigraph> with_doubled_edges(const std::vector<Multigraph>& graphs, int max_doubled) {
    std::vector<Multigraph> out;
    std::unordered_set<std::string> seen;
    for (const Multigraph& g : graphs) {
        const int m = g.edge_count();
        std::vector<int> chosen;
        auto emit = [&] {
            Multigraph h = g;
            for (int i : chosen) h.add_edge(g.edges()[static_cast<std::size_t>(i)].u, g.edges()[static_cast<std::size_t>(i)].v);
            if (seen.insert(canonical_form(h)).second) out.push_back(std::move(h));
        };
        auto rec = [&](auto&& self, int from) -> void {
            emit();
            if (static_cast<int>(chosen.size()) == max_doubled) return;
            for (int i = from; i < m; ++i) {
                chosen.push_back(i);
                self(self, i + 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

/// 2-connected hypomatchable multigraphs on n nodes with edge multiplicity at most 2 and at
/// most `max_doubled` doubled edges, one per isomorphism class.
inline std::vector<Multigraph> two_connected_hypomatchable(int n, int max_doubled) {
    auto simple = simple_graphs(n, [](const Multigraph& g) { return two_connected_by_masks(g) && hypomatchable_by_subsets(g); });
    if (max_doubled == 0) return simple;
    return with_doubled_edges(simple, max_doubled);
}

/// Connected multigraphs without isolated nodes having 1..max_edges edges and multiplicity at
/// most max_multiplicity, one per isomorphism class, ordered by edge count. Every such graph
/// with m+1 edges comes from one with m edges by adding an edge (drop a non-bridge edge, or a
/// pendant edge with its leaf), so growing edge by edge reaches all of them.
inline std::vector<Multigraph> connected_multigraphs(int max_edges, int max_multiplicity = 2) {
    std::vector<Multigraph> all;
    if (max_edges < 1) return all;
    std::vector<Multigraph> level{Multigraph::from_pairs(2, {{0, 1}})};
    for (int m = 1;; ++m) {
        all.insert(all.end(), level.begin(), level.end());
        if (m == max_edges) break;
        std::vector<Multigraph> next;
        std::unordered_set<std::string> seen;
        auto offer = [&](Multigraph h) {
            if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
        };
        for (const Multigraph& g : level) {
            const int n = g.node_count();
            for (NodeId u = 0; u < n; ++u) {
                for (NodeId v = u + 1; v < n; ++v)
                    if (g.multiplicity(u, v) < max_multiplicity) {
                        Multigraph h = g;
                        h.add_edge(u, v);
                        offer(std::move(h));
                    }
                Multigraph h(n + 1);
                for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
                h.add_edge(u, n);
                offer(std::move(h));
            }
        }
        level = std::move(next);
    }
    return all;
}

/// G(n, p) with a seeded engine.
inline Multigraph random_simple_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Multigraph g(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Each pair independently gets 0..max_multiplicity parallel edges, multiplicity 0 with
/// probability 1 - p.
inline Multigraph random_multigraph(int n, double p, int max_multiplicity, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::uniform_int_distribution<int> mult(1, max_multiplicity);
    Multigraph g(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (coin(rng))
                for (int c = mult(rng); c > 0; --c) g.add_edge(u, v);
    return g;
}

} // namespace nplus
