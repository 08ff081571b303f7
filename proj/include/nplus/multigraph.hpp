#pragma once

#include "nplus/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace nplus {

using NodeId = int;
using EdgeId = int;
using NodeMask = std::uint64_t;

inline constexpr int kMaskNodes = 64;

struct Edge {
    EdgeId id = 0;
    NodeId u = 0;
    NodeId v = 0;

    NodeId other(NodeId x) const { return x == u ? v : u; }
    bool touches(NodeId x) const { return u == x || v == x; }
    bool joins(NodeId a, NodeId b) const { return (u == a && v == b) || (u == b && v == a); }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected loopless multigraph on dense node ids 0..n-1.
///
/// Edges keep their ids across subgraph operations, and every node carries a label
/// naming it in the graph it was cut out of (identity for freshly built graphs), so
/// results computed on subgraphs can be reported in the host's coordinates.
class Multigraph {
public:
    Multigraph() = default;

    explicit Multigraph(int node_count) : n_(node_count) {
        if (node_count < 0) throw InputError("node count must be non-negative");
        labels_.resize(static_cast<std::size_t>(n_));
        std::iota(labels_.begin(), labels_.end(), 0);
        mult_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
        incident_.resize(static_cast<std::size_t>(n_));
    }

    static Multigraph from_pairs(int node_count, std::span<const std::pair<NodeId, NodeId>> pairs) {
        Multigraph g(node_count);
        for (auto [u, v] : pairs) g.add_edge(u, v);
        return g;
    }

    static Multigraph from_pairs(int node_count, std::initializer_list<std::pair<NodeId, NodeId>> pairs) {
        return from_pairs(node_count, std::span<const std::pair<NodeId, NodeId>>(pairs.begin(), pairs.size()));
    }

    /// Adds an edge with the next free id and returns that id.
    EdgeId add_edge(NodeId u, NodeId v) { return add_edge_with_id(next_id_, u, v); }

    EdgeId add_edge_with_id(EdgeId id, NodeId u, NodeId v) {
        check_node(u);
        check_node(v);
        if (u == v) throw InputError("loops are not allowed (node " + std::to_string(u) + ")");
        if (id < 0) throw InputError("edge ids must be non-negative");
        if (has_edge(id)) throw InputError("duplicate edge id " + std::to_string(id));
        if (static_cast<std::size_t>(id) >= index_of_.size()) index_of_.resize(static_cast<std::size_t>(id) + 1, -1);
        index_of_[static_cast<std::size_t>(id)] = static_cast<int>(edges_.size());
        edges_.push_back(Edge{id, u, v});
        ++mult_[cell(u, v)];
        ++mult_[cell(v, u)];
        incident_[static_cast<std::size_t>(u)].push_back(id);
        incident_[static_cast<std::size_t>(v)].push_back(id);
        next_id_ = std::max(next_id_, id + 1);
        return id;
    }

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }

    bool has_node(NodeId v) const { return v >= 0 && v < n_; }
    bool has_edge(EdgeId id) const {
        return id >= 0 && static_cast<std::size_t>(id) < index_of_.size() && index_of_[static_cast<std::size_t>(id)] >= 0;
    }

    const Edge& edge(EdgeId id) const {
        if (!has_edge(id)) throw InputError("unknown edge id " + std::to_string(id));
        return edges_[static_cast<std::size_t>(index_of_[static_cast<std::size_t>(id)])];
    }

    /// Position of an edge in edges(); the line graph numbers its nodes this way.
    int edge_position(EdgeId id) const {
        if (!has_edge(id)) throw InputError("unknown edge id " + std::to_string(id));
        return index_of_[static_cast<std::size_t>(id)];
    }

    EdgeId next_edge_id() const { return next_id_; }

    int multiplicity(NodeId u, NodeId v) const {
        check_node(u);
        check_node(v);
        return mult_[cell(u, v)];
    }
    bool adjacent(NodeId u, NodeId v) const { return u != v && multiplicity(u, v) > 0; }

    /// Degree counting parallel copies.
    int degree(NodeId v) const {
        check_node(v);
        return static_cast<int>(incident_[static_cast<std::size_t>(v)].size());
    }

    const std::vector<EdgeId>& incident_edges(NodeId v) const {
        check_node(v);
        return incident_[static_cast<std::size_t>(v)];
    }

    /// Distinct neighbors in increasing order.
    std::vector<NodeId> neighbors(NodeId v) const {
        check_node(v);
        std::vector<NodeId> out;
        for (NodeId w = 0; w < n_; ++w)
            if (mult_[cell(v, w)] > 0) out.push_back(w);
        return out;
    }

    NodeMask neighbor_mask(NodeId v) const {
        require_mask_size();
        NodeMask m = 0;
        for (NodeId w = 0; w < n_; ++w)
            if (mult_[cell(v, w)] > 0) m |= NodeMask{1} << w;
        return m;
    }

    bool is_simple() const {
        return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m <= 1; });
    }

    /// Number of edges beyond the first copy of each adjacent pair.
    int parallel_edge_count() const {
        int extra = 0;
        for (NodeId u = 0; u < n_; ++u)
            for (NodeId v = u + 1; v < n_; ++v) extra += std::max(0, mult_[cell(u, v)] - 1);
        return extra;
    }

    NodeId label(NodeId v) const {
        check_node(v);
        return labels_[static_cast<std::size_t>(v)];
    }
    const std::vector<NodeId>& labels() const { return labels_; }
    void set_labels(std::vector<NodeId> labels) {
        if (static_cast<int>(labels.size()) != n_) throw InputError("label vector size mismatch");
        labels_ = std::move(labels);
    }

    void require_mask_size() const {
        if (n_ > kMaskNodes) throw ResourceError("graph has more than 64 nodes");
    }

    /// Same node count and same edge list (ids and endpoints, order-insensitive); labels ignored.
    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
        auto norm = [](const Multigraph& g) {
            std::vector<std::tuple<EdgeId, NodeId, NodeId>> out;
            for (const Edge& e : g.edges_) out.emplace_back(e.id, std::min(e.u, e.v), std::max(e.u, e.v));
            std::sort(out.begin(), out.end());
            return out;
        };
        return norm(a) == norm(b);
    }

private:
    void check_node(NodeId v) const {
        if (!has_node(v)) throw InputError("unknown node id " + std::to_string(v));
    }
    std::size_t cell(NodeId u, NodeId v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    EdgeId next_id_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> index_of_;
    std::vector<int> mult_;
    std::vector<std::vector<EdgeId>> incident_;
    std::vector<NodeId> labels_;
};

inline NodeMask mask_of(std::span<const NodeId> nodes) {
    NodeMask m = 0;
    for (NodeId v : nodes) m |= NodeMask{1} << v;
    return m;
}

inline std::vector<NodeId> nodes_of(NodeMask m) {
    std::vector<NodeId> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline NodeMask all_nodes_mask(int n) { return n >= 64 ? ~NodeMask{0} : (NodeMask{1} << n) - 1; }

/// Sub-multigraph on `nodes` (listed order becomes the new numbering) with every edge,
/// including parallel copies, whose endpoints both lie in `nodes`. Edge ids are preserved
/// and the labels of `g` are carried over.
inline Multigraph induced_subgraph(const Multigraph& g, std::span<const NodeId> nodes) {
    std::vector<int> pos(static_cast<std::size_t>(g.node_count()), -1);
    std::vector<NodeId> labels;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        NodeId v = nodes[i];
        if (!g.has_node(v)) throw InputError("unknown node id " + std::to_string(v));
        if (pos[static_cast<std::size_t>(v)] >= 0) throw InputError("node " + std::to_string(v) + " listed twice");
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
        labels.push_back(g.label(v));
    }
    Multigraph sub(static_cast<int>(nodes.size()));
    for (const Edge& e : g.edges()) {
        int a = pos[static_cast<std::size_t>(e.u)];
        int b = pos[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) sub.add_edge_with_id(e.id, a, b);
    }
    sub.set_labels(std::move(labels));
    return sub;
}

inline Multigraph induced_subgraph(const Multigraph& g, NodeMask nodes) {
    auto list = nodes_of(nodes);
    return induced_subgraph(g, std::span<const NodeId>(list));
}

inline Multigraph induced_subgraph(const Multigraph& g, std::initializer_list<NodeId> nodes) {
    return induced_subgraph(g, std::span<const NodeId>(nodes.begin(), nodes.size()));
}

/// g minus one node; remaining nodes keep their relative order.
inline Multigraph remove_node(const Multigraph& g, NodeId v) {
    if (!g.has_node(v)) throw InputError("unknown node id " + std::to_string(v));
    std::vector<NodeId> keep;
    for (NodeId w = 0; w < g.node_count(); ++w)
        if (w != v) keep.push_back(w);
    return induced_subgraph(g, std::span<const NodeId>(keep));
}

/// g minus one edge; node set and all other edge ids unchanged.
inline Multigraph remove_edge(const Multigraph& g, EdgeId id) {
    g.edge(id);
    Multigraph out(g.node_count());
    for (const Edge& e : g.edges())
        if (e.id != id) out.add_edge_with_id(e.id, e.u, e.v);
    out.set_labels(g.labels());
    return out;
}

/// Sub-multigraph spanned by a set of edge ids: node set is the set of their endpoints.
inline Multigraph edge_subgraph(const Multigraph& g, std::span<const EdgeId> ids) {
    std::vector<NodeId> nodes;
    for (EdgeId id : ids) {
        const Edge& e = g.edge(id);
        nodes.push_back(e.u);
        nodes.push_back(e.v);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::vector<int> pos(static_cast<std::size_t>(g.node_count()), -1);
    std::vector<NodeId> labels;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        pos[static_cast<std::size_t>(nodes[i])] = static_cast<int>(i);
        labels.push_back(g.label(nodes[i]));
    }
    Multigraph sub(static_cast<int>(nodes.size()));
    for (EdgeId id : ids) {
        const Edge& e = g.edge(id);
        sub.add_edge_with_id(id, pos[static_cast<std::size_t>(e.u)], pos[static_cast<std::size_t>(e.v)]);
    }
    sub.set_labels(std::move(labels));
    return sub;
}

/// Collapses parallel copies, keeping the lowest edge id of each adjacent pair.
inline Multigraph underlying_simple(const Multigraph& g) {
    Multigraph out(g.node_count());
    std::vector<Edge> sorted(g.edges().begin(), g.edges().end());
    std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (const Edge& e : sorted)
        if (!out.adjacent(e.u, e.v)) out.add_edge_with_id(e.id, e.u, e.v);
    out.set_labels(g.labels());
    return out;
}

/// Simple complement on the same node set.
inline Multigraph complement(const Multigraph& g) {
    Multigraph out(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v = u + 1; v < g.node_count(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    out.set_labels(g.labels());
    return out;
}

namespace detail {

inline int count_components(const Multigraph& g, NodeId skip) {
    const int n = g.node_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<NodeId> stack;
    int comps = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (s == skip || seen[static_cast<std::size_t>(s)]) continue;
        ++comps;
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (EdgeId id : g.incident_edges(x)) {
                NodeId y = g.edge(id).other(x);
                if (y == skip || seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = 1;
                stack.push_back(y);
            }
        }
    }
    return comps;
}

} // namespace detail

/// The empty graph counts as connected.
inline bool is_connected(const Multigraph& g) { return detail::count_components(g, -1) <= 1; }

/// At least two nodes and no cut node. A single edge (or bundle of parallel edges) on two
/// nodes is 2-connected.
inline bool is_two_connected(const Multigraph& g) {
    if (g.node_count() < 2) return false;
    if (!is_connected(g)) return false;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (detail::count_components(g, v) > 1) return false;
    return true;
}

/// A node whose removal disconnects g, or -1 if none exists.
inline NodeId find_cut_node(const Multigraph& g) {
    if (!is_connected(g)) return -1;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (detail::count_components(g, v) > 1) return v;
    return -1;
}

inline bool is_bipartite(const Multigraph& g) {
    const int n = g.node_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (EdgeId id : g.incident_edges(x)) {
                NodeId y = g.edge(id).other(x);
                if (side[static_cast<std::size_t>(y)] < 0) {
                    side[static_cast<std::size_t>(y)] = 1 - side[static_cast<std::size_t>(x)];
                    stack.push_back(y);
                } else if (side[static_cast<std::size_t>(y)] == side[static_cast<std::size_t>(x)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Simple graph whose nodes form a single chordless cycle (any length >= 3).
inline bool is_cycle(const Multigraph& g) {
    if (g.node_count() < 3 || !g.is_simple() || g.edge_count() != g.node_count()) return false;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

/// Chordless odd cycle of length at least five.
inline bool is_odd_hole(const Multigraph& g) { return g.node_count() >= 5 && g.node_count() % 2 == 1 && is_cycle(g); }

inline bool is_clique(const Multigraph& g, std::span<const NodeId> nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (!g.adjacent(nodes[i], nodes[j])) return false;
    return true;
}

inline bool is_stable(const Multigraph& g, std::span<const NodeId> nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (g.adjacent(nodes[i], nodes[j])) return false;
    return true;
}

} // namespace nplus
