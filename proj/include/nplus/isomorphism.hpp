#pragma once

#include "nplus/multigraph.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace nplus {

inline constexpr int kDefaultIsomorphismLimit = 64;

namespace detail {

struct DenseGraph {
    int n = 0;
    std::vector<int> mult;

    explicit DenseGraph(const Multigraph& g) : n(g.node_count()), mult(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
        for (const Edge& e : g.edges()) {
            ++at(e.u, e.v);
            ++at(e.v, e.u);
        }
    }
    int& at(int u, int v) { return mult[static_cast<std::size_t>(u * n + v)]; }
    int at(int u, int v) const { return mult[static_cast<std::size_t>(u * n + v)]; }
};

using Coloring = std::vector<int>;

// Joint colour refinement over several graphs: a node's new colour is determined by its old
// colour and the multiset of (neighbour colour, multiplicity) pairs. Colours are renumbered
// through a shared sorted signature table, so colour order refines the previous order and
// colours are comparable across the graphs.
inline void refine(const std::vector<const DenseGraph*>& graphs, std::vector<Coloring*>& colors) {
    using Signature = std::vector<int>;
    int previous_count = -1;
    for (;;) {
        std::vector<Signature> sigs;
        std::vector<std::vector<std::size_t>> slot(graphs.size());
        for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
            const DenseGraph& g = *graphs[gi];
            const Coloring& c = *colors[gi];
            for (int v = 0; v < g.n; ++v) {
                Signature s{c[static_cast<std::size_t>(v)]};
                std::vector<std::pair<int, int>> nb;
                for (int w = 0; w < g.n; ++w) {
                    int m = g.at(v, w);
                    if (m > 0) nb.emplace_back(c[static_cast<std::size_t>(w)], m);
                }
                std::sort(nb.begin(), nb.end());
                for (auto [col, m] : nb) {
                    s.push_back(col);
                    s.push_back(m);
                }
                slot[gi].push_back(sigs.size());
                sigs.push_back(std::move(s));
            }
        }
        std::vector<Signature> table = sigs;
        std::sort(table.begin(), table.end());
        table.erase(std::unique(table.begin(), table.end()), table.end());
        for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
            Coloring& c = *colors[gi];
            for (std::size_t v = 0; v < c.size(); ++v) {
                auto it = std::lower_bound(table.begin(), table.end(), sigs[slot[gi][v]]);
                c[v] = static_cast<int>(it - table.begin());
            }
        }
        int count = static_cast<int>(table.size());
        if (count == previous_count) return;
        previous_count = count;
    }
}

inline std::vector<int> histogram(const Coloring& c, int colours) {
    std::vector<int> h(static_cast<std::size_t>(colours), 0);
    for (int x : c) ++h[static_cast<std::size_t>(x)];
    return h;
}

inline int colour_count(const Coloring& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

// First smallest colour class with more than one member, or -1 when discrete.
inline int target_cell(const Coloring& c) {
    auto h = histogram(c, colour_count(c));
    int best = -1;
    for (int col = 0; col < static_cast<int>(h.size()); ++col)
        if (h[static_cast<std::size_t>(col)] > 1 && (best < 0 || h[static_cast<std::size_t>(col)] < h[static_cast<std::size_t>(best)])) best = col;
    return best;
}

inline void individualize(Coloring& c, int v) {
    for (std::size_t w = 0; w < c.size(); ++w) c[w] = 2 * c[w] + (static_cast<int>(w) == v ? 0 : 1);
}

inline bool search_isomorphism(const DenseGraph& a, const DenseGraph& b, Coloring ca, Coloring cb, std::vector<int>& out) {
    std::vector<const DenseGraph*> gs{&a, &b};
    std::vector<Coloring*> cs{&ca, &cb};
    refine(gs, cs);
    int colours = std::max(colour_count(ca), colour_count(cb));
    if (histogram(ca, colours) != histogram(cb, colours)) return false;
    int cell = target_cell(ca);
    if (cell < 0) {
        std::vector<int> by_colour(static_cast<std::size_t>(colours), -1);
        for (int w = 0; w < b.n; ++w) by_colour[static_cast<std::size_t>(cb[static_cast<std::size_t>(w)])] = w;
        std::vector<int> map(static_cast<std::size_t>(a.n));
        for (int v = 0; v < a.n; ++v) map[static_cast<std::size_t>(v)] = by_colour[static_cast<std::size_t>(ca[static_cast<std::size_t>(v)])];
        for (int u = 0; u < a.n; ++u)
            for (int v = u + 1; v < a.n; ++v)
                if (a.at(u, v) != b.at(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)])) return false;
        out = std::move(map);
        return true;
    }
    int x = static_cast<int>(std::find(ca.begin(), ca.end(), cell) - ca.begin());
    for (int y = 0; y < b.n; ++y) {
        if (cb[static_cast<std::size_t>(y)] != cell) continue;
        Coloring na = ca, nb = cb;
        individualize(na, x);
        individualize(nb, y);
        if (search_isomorphism(a, b, std::move(na), std::move(nb), out)) return true;
    }
    return false;
}

inline bool twins(const DenseGraph& g, int u, int v) {
    for (int w = 0; w < g.n; ++w) {
        if (w == u || w == v) continue;
        if (g.at(u, w) != g.at(v, w)) return false;
    }
    return true;
}

inline void search_canonical(const DenseGraph& g, Coloring c, std::string& best, bool& have) {
    std::vector<const DenseGraph*> gs{&g};
    std::vector<Coloring*> cs{&c};
    refine(gs, cs);
    int cell = target_cell(c);
    if (cell < 0) {
        std::vector<int> order(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) order[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])] = v;
        std::string code;
        code.reserve(static_cast<std::size_t>(g.n * (g.n - 1) / 2));
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                code.push_back(static_cast<char>('0' + g.at(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])));
        if (!have || code < best) {
            best = std::move(code);
            have = true;
        }
        return;
    }
    std::vector<int> tried;
    for (int v = 0; v < g.n; ++v) {
        if (c[static_cast<std::size_t>(v)] != cell) continue;
        if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); })) continue;
        tried.push_back(v);
        Coloring nc = c;
        individualize(nc, v);
        search_canonical(g, std::move(nc), best, have);
    }
}

} // namespace detail

/// Node bijection `map` with mult_a(u,v) == mult_b(map[u],map[v]) for all pairs, if one exists.
inline std::optional<std::vector<NodeId>> find_isomorphism(const Multigraph& a, const Multigraph& b,
                                                           int max_nodes = kDefaultIsomorphismLimit) {
    if (a.node_count() > max_nodes || b.node_count() > max_nodes)
        throw ResourceError("isomorphism test limited to " + std::to_string(max_nodes) + " nodes");
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return std::nullopt;
    if (a.node_count() == 0) return std::vector<NodeId>{};
    detail::DenseGraph da(a), db(b);
    std::vector<int> out;
    detail::Coloring ca(static_cast<std::size_t>(a.node_count()), 0), cb(static_cast<std::size_t>(b.node_count()), 0);
    if (!detail::search_isomorphism(da, db, std::move(ca), std::move(cb), out)) return std::nullopt;
    return out;
}

inline bool are_isomorphic(const Multigraph& a, const Multigraph& b, int max_nodes = kDefaultIsomorphismLimit) {
    return find_isomorphism(a, b, max_nodes).has_value();
}

/// Isomorphism-invariant code: node count followed by the upper-triangle multiplicities under
/// a canonical relabelling. Two multigraphs are isomorphic iff their codes are equal.
inline std::string canonical_form(const Multigraph& g, int max_nodes = kDefaultIsomorphismLimit) {
    if (g.node_count() > max_nodes)
        throw ResourceError("canonical labelling limited to " + std::to_string(max_nodes) + " nodes");
    detail::DenseGraph dg(g);
    std::string best;
    bool have = false;
    if (g.node_count() > 0) detail::search_canonical(dg, detail::Coloring(static_cast<std::size_t>(g.node_count()), 0), best, have);
    return std::to_string(g.node_count()) + ":" + best;
}

} // namespace nplus
