#pragma once

#include "nplus/multigraph.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <string>
#include <vector>

namespace nplus {

struct LineGraphResult {
    Multigraph graph;                  // always simple
    std::vector<EdgeId> node_to_edge;  // line node i -> i-th edge of the root
    std::map<EdgeId, NodeId> edge_to_node;

    NodeId node_of(EdgeId e) const {
        auto it = edge_to_node.find(e);
        if (it == edge_to_node.end()) throw InputError("edge " + std::to_string(e) + " is not in the root graph");
        return it->second;
    }
};

/// Nodes are the edges of `h` in edge-list order; two nodes are joined by exactly one edge
/// when the root edges share at least one endpoint (parallel root edges share two).
inline LineGraphResult line_graph(const Multigraph& h) {
    if (h.edge_count() == 0) throw InputError("line graph of a graph without edges");
    LineGraphResult out;
    const auto edges = h.edges();
    out.graph = Multigraph(static_cast<int>(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out.node_to_edge.push_back(edges[i].id);
        out.edge_to_node[edges[i].id] = static_cast<NodeId>(i);
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& a = edges[i];
            const Edge& b = edges[j];
            if (a.touches(b.u) || a.touches(b.v)) out.graph.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
        }
    return out;
}

/// Node `node` with its neighbourhood split into two disjoint parts.
struct StretchSpec {
    NodeId node = 0;
    std::vector<NodeId> part1;
    std::vector<NodeId> part2;
};

namespace detail {

inline Multigraph stretch(const Multigraph& g, const StretchSpec& spec, bool allow_empty_part) {
    if (!g.is_simple()) throw InputError("stretching requires a simple graph");
    const NodeId v = spec.node;
    if (!g.has_node(v)) throw InputError("unknown node id " + std::to_string(v));
    if (!allow_empty_part && (spec.part1.empty() || spec.part2.empty()))
        throw InputError("stretching needs two nonempty neighbourhood parts");
    std::vector<NodeId> p1 = spec.part1, p2 = spec.part2;
    std::sort(p1.begin(), p1.end());
    std::sort(p2.begin(), p2.end());
    std::vector<NodeId> both;
    std::set_union(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(both));
    if (std::adjacent_find(p1.begin(), p1.end()) != p1.end() || std::adjacent_find(p2.begin(), p2.end()) != p2.end() ||
        both.size() != p1.size() + p2.size())
        throw InputError("neighbourhood parts must be disjoint");
    if (both != g.neighbors(v)) throw InputError("neighbourhood parts must cover exactly N(v)");

    // v keeps its id as v1; w and v2 are appended.
    const int n = g.node_count();
    const NodeId w = n, v2 = n + 1;
    Multigraph out(n + 2);
    for (const Edge& e : g.edges()) {
        if (!e.touches(v)) {
            out.add_edge_with_id(e.id, e.u, e.v);
            continue;
        }
        NodeId a = e.other(v);
        bool second = std::binary_search(p2.begin(), p2.end(), a);
        out.add_edge_with_id(e.id, second ? v2 : v, a);
    }
    out.add_edge(v, w);
    out.add_edge(w, v2);
    return out;
}

} // namespace detail

/// Replaces `spec.node` by a path v1 - w - v2 with v1 joined to part1 and v2 joined to part2.
/// v1 keeps the old id; w and v2 become nodes n and n+1.
inline Multigraph stretch_node(const Multigraph& g, const StretchSpec& spec) { return detail::stretch(g, spec, false); }

/// Replaces edge e = uv by a path u - a - b - v through two new nodes (n and n+1).
/// The edge u - a keeps the id of e.
inline Multigraph three_subdivision(const Multigraph& h, EdgeId e) {
    const Edge target = h.edge(e);
    const int n = h.node_count();
    Multigraph out(n + 2);
    for (const Edge& x : h.edges())
        if (x.id != e) out.add_edge_with_id(x.id, x.u, x.v);
    out.add_edge_with_id(e, target.u, n);
    out.add_edge(n, n + 1);
    out.add_edge(n + 1, target.v);
    return out;
}

/// Stretching of the line-graph node of a simple edge e = u1u2 whose neighbourhood parts are
/// the edges meeting e at u1 and at u2. A part may be empty when an endpoint has degree one.
inline Multigraph canonical_stretch(const Multigraph& h, EdgeId e) {
    const Edge target = h.edge(e);
    if (h.multiplicity(target.u, target.v) != 1)
        throw InputError("canonical partition undefined: edge " + std::to_string(e) + " has a parallel copy");
    const LineGraphResult lg = line_graph(h);
    StretchSpec spec;
    spec.node = lg.node_of(e);
    for (EdgeId f : h.incident_edges(target.u))
        if (f != e) spec.part1.push_back(lg.node_of(f));
    for (EdgeId f : h.incident_edges(target.v))
        if (f != e) spec.part2.push_back(lg.node_of(f));
    return detail::stretch(lg.graph, spec, true);
}

} // namespace nplus
