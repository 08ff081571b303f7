#pragma once

#include "nplus/eardecomp.hpp"
#include "nplus/linegraph.hpp"
#include "nplus/matching.hpp"
#include "nplus/multigraph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nplus {

enum class HypomatchKind { ThreeNodes, OddHole, Forbidden };
enum class ForbiddenKind { DoubleEdge, Chord, LongEarNonAdjacent };

inline const char* to_string(HypomatchKind k) {
    switch (k) {
    case HypomatchKind::ThreeNodes: return "three_nodes";
    case HypomatchKind::OddHole: return "odd_hole";
    case HypomatchKind::Forbidden: return "forbidden";
    }
    return "?";
}

inline const char* to_string(ForbiddenKind k) {
    switch (k) {
    case ForbiddenKind::DoubleEdge: return "double_edge";
    case ForbiddenKind::Chord: return "chord";
    case ForbiddenKind::LongEarNonAdjacent: return "long_ear_non_adjacent";
    }
    return "?";
}

/// Family tag of an odd hole with one ear: C+d, C+c or C+E.
inline const char* family_tag(ForbiddenKind k) {
    switch (k) {
    case ForbiddenKind::DoubleEdge: return "C+d";
    case ForbiddenKind::Chord: return "C+c";
    case ForbiddenKind::LongEarNonAdjacent: return "C+E";
    }
    return "?";
}

/// An odd hole (length >= 5) plus one ear between two distinct hole nodes. Node ids are the
/// labels of the classified graph, so a witness found in an induced subgraph names host nodes.
struct ForbiddenWitness {
    ForbiddenKind kind = ForbiddenKind::Chord;
    std::vector<NodeId> hole;        // cyclic order
    std::vector<EdgeId> hole_edges;  // hole_edges[i] joins hole[i] and hole[(i+1) % size]
    Ear ear;

    int hole_length() const { return static_cast<int>(hole.size()); }
    int ear_length() const { return ear.length(); }

    std::vector<NodeId> nodes() const {
        std::vector<NodeId> out = hole;
        for (std::size_t i = 1; i + 1 < ear.path.size(); ++i) out.push_back(ear.path[i]);
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<EdgeId> edges() const {
        std::vector<EdgeId> out = hole_edges;
        out.insert(out.end(), ear.edges.begin(), ear.edges.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct HypomatchClass {
    HypomatchKind kind = HypomatchKind::ThreeNodes;
    std::optional<ForbiddenWitness> witness;  // present iff kind == Forbidden
};

namespace detail {

inline void require_two_connected_hypomatchable(const Multigraph& h) {
    if (!is_two_connected(h)) {
        NodeId cut = find_cut_node(h);
        throw ContractError("two_connected", cut >= 0 ? std::optional<int>(h.label(cut)) : std::nullopt, "graph is not 2-connected");
    }
    if (h.node_count() % 2 == 0) throw ContractError("hypomatchable", h.label(0), "graph has even order");
    if (NodeId v = hypomatchability_violation(h); v >= 0)
        throw ContractError("hypomatchable", h.label(v), "graph minus node " + std::to_string(h.label(v)) + " has no perfect matching");
}

inline ForbiddenWitness relabel(const Multigraph& h, ForbiddenWitness w) {
    for (NodeId& v : w.hole) v = h.label(v);
    for (NodeId& v : w.ear.path) v = h.label(v);
    return w;
}

} // namespace detail

/// Exactly one of: three nodes, an odd hole, or a concrete forbidden subgraph H0 + E1 taken
/// from a normalized 2-connected ear decomposition.
inline HypomatchClass classify_hypomatchable(const Multigraph& h) {
    detail::require_two_connected_hypomatchable(h);
    if (h.node_count() == 3) return {HypomatchKind::ThreeNodes, std::nullopt};
    if (is_odd_hole(h)) return {HypomatchKind::OddHole, std::nullopt};

    const EarDecomposition d = normalize_ear_decomposition(two_connected_ear_decomposition(h));
    if (d.ears.empty()) throw std::logic_error("graph is neither an odd hole nor decomposes with an ear");
    const Ear& ear = d.ears.front();
    const std::size_t k = d.cycle.size();
    const auto pos_v = static_cast<std::size_t>(std::find(d.cycle.begin(), d.cycle.end(), ear.first()) - d.cycle.begin());
    const auto pos_w = static_cast<std::size_t>(std::find(d.cycle.begin(), d.cycle.end(), ear.last()) - d.cycle.begin());
    const bool forward = (pos_v + 1) % k == pos_w;
    const bool backward = (pos_w + 1) % k == pos_v;

    ForbiddenWitness w;
    if (!(forward || backward) || !ear.is_long()) {
        w.kind = ear.is_long() ? ForbiddenKind::LongEarNonAdjacent : (forward || backward ? ForbiddenKind::DoubleEdge : ForbiddenKind::Chord);
        w.hole = d.cycle;
        w.hole_edges = d.cycle_edges;
        w.ear = ear;
    } else {
        // Long ear on adjacent hole nodes v, v': the hole becomes the ear plus the long way
        // round from v' back to v, and the skipped hole edge vv' is the chord.
        w.kind = ForbiddenKind::Chord;
        w.hole = ear.path;
        w.hole_edges = ear.edges;
        const std::size_t step = forward ? 1 : k - 1;
        const std::size_t chord_slot = forward ? pos_v : pos_w;
        for (std::size_t i = 1, at = pos_w; i < k; ++i) {
            std::size_t next = (at + step) % k;
            w.hole_edges.push_back(d.cycle_edges[forward ? at : next]);
            if (next != pos_v) w.hole.push_back(d.cycle[next]);
            at = next;
        }
        w.ear = Ear{{ear.first(), ear.last()}, {d.cycle_edges[chord_slot]}};
    }
    return {HypomatchKind::Forbidden, detail::relabel(h, std::move(w))};
}

enum class Verdict { Perfect, Imperfect };

struct WitnessFamily {
    std::string kind;  // "C+d", "C+c" or "C+E"
    int hole_length = 0;
    int ear_length = 0;
};

struct NPlusCertificate {
    Verdict verdict = Verdict::Perfect;
    std::vector<NodeId> witness_root_nodes;  // labels of the root graph
    std::vector<EdgeId> witness_root_edges;
    std::vector<NodeId> line_nodes;          // nodes of L(root) spanning L(witness)
    std::optional<ForbiddenWitness> witness;
    std::optional<WitnessFamily> family;

    bool perfect() const { return verdict == Verdict::Perfect; }
};

struct DecideOptions {
    int max_nodes = 18;
};

namespace detail {

// Cheap necessary conditions for a 2-connected hypomatchable induced subgraph on `s`.
inline bool plausible_block(const std::vector<NodeMask>& nbr, NodeMask s) {
    for (NodeMask rest = s; rest; rest &= rest - 1) {
        NodeId v = std::countr_zero(rest);
        if (std::popcount(nbr[static_cast<std::size_t>(v)] & s) < 2) return false;
    }
    NodeMask seen = s & (~s + 1), frontier = seen;
    while (frontier) {
        NodeMask next = 0;
        for (NodeMask f = frontier; f; f &= f - 1) next |= nbr[static_cast<std::size_t>(std::countr_zero(f))] & s;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == s;
}

inline bool is_forbidden_block(const Multigraph& sub) {
    return is_two_connected(sub) && is_hypomatchable(sub) && !is_odd_hole(sub);
}

// Visits odd node subsets of `pool` with at least five nodes, smallest first and
// lexicographically within a size, until `visit` returns true.
template <class Visit>
bool for_each_odd_subset(const std::vector<NodeId>& pool, Visit&& visit) {
    const int n = static_cast<int>(pool.size());
    for (int size = 5; size <= n; size += 2) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            NodeMask s = 0;
            for (int i : idx) s |= NodeMask{1} << pool[static_cast<std::size_t>(i)];
            if (visit(s)) return true;
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return false;
}

inline std::optional<NodeMask> smallest_forbidden_subset(const Multigraph& h, const std::vector<NodeId>& pool) {
    std::vector<NodeMask> nbr;
    for (NodeId v = 0; v < h.node_count(); ++v) nbr.push_back(h.neighbor_mask(v));
    std::optional<NodeMask> found;
    for_each_odd_subset(pool, [&](NodeMask s) {
        if (!plausible_block(nbr, s)) return false;
        if (!is_forbidden_block(induced_subgraph(h, s))) return false;
        found = s;
        return true;
    });
    return found;
}

inline NodeId id_of_label(const Multigraph& h, NodeId label) {
    const auto& labels = h.labels();
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw InputError("witness names node " + std::to_string(label) + " which is not in the graph");
    return static_cast<NodeId>(it - labels.begin());
}

} // namespace detail

/// Shrinks a forbidden classification to the smallest (then lexicographically first) node set
/// inside the witness that still carries a forbidden 2-connected hypomatchable induced
/// subgraph, and reports it as odd hole + one ear together with its line-graph nodes.
inline NPlusCertificate minimal_witness(const Multigraph& h, const HypomatchClass& forbidden) {
    if (forbidden.kind != HypomatchKind::Forbidden || !forbidden.witness)
        throw ContractError("forbidden", std::nullopt, "minimal witness needs a forbidden classification");
    h.require_mask_size();
    std::vector<NodeId> pool;
    for (NodeId label : forbidden.witness->nodes()) pool.push_back(detail::id_of_label(h, label));
    std::sort(pool.begin(), pool.end());

    auto subset = detail::smallest_forbidden_subset(h, pool);
    if (!subset) throw ContractError("forbidden", std::nullopt, "witness node set carries no forbidden induced subgraph of the graph");
    const Multigraph sub = induced_subgraph(h, *subset);
    const HypomatchClass cls = classify_hypomatchable(sub);
    const ForbiddenWitness& w = *cls.witness;

    NPlusCertificate cert;
    cert.verdict = Verdict::Imperfect;
    cert.witness = w;
    cert.witness_root_nodes = w.nodes();
    cert.witness_root_edges = w.edges();
    cert.family = WitnessFamily{family_tag(w.kind), w.hole_length(), w.ear_length()};
    const LineGraphResult lg = line_graph(h);
    for (EdgeId e : cert.witness_root_edges) cert.line_nodes.push_back(lg.node_of(e));
    std::sort(cert.line_nodes.begin(), cert.line_nodes.end());
    return cert;
}

/// L(h) is N+-perfect iff every 2-connected hypomatchable induced subgraph of h has three
/// nodes or is an odd hole. Scans odd node sets of size >= 5 in increasing size.
inline NPlusCertificate decide_line_nplus_perfect(const Multigraph& h, const DecideOptions& opts = {}) {
    if (h.edge_count() == 0) throw InputError("root graph has no edges");
    if (h.node_count() > opts.max_nodes)
        throw ResourceError("root graph has " + std::to_string(h.node_count()) + " nodes; exhaustive scan limited to " +
                            std::to_string(opts.max_nodes) + " (search directly for an odd hole with one ear instead)");
    std::vector<NodeId> pool(static_cast<std::size_t>(h.node_count()));
    for (NodeId v = 0; v < h.node_count(); ++v) pool[static_cast<std::size_t>(v)] = v;
    auto subset = detail::smallest_forbidden_subset(h, pool);
    if (!subset) return NPlusCertificate{};
    return minimal_witness(h, classify_hypomatchable(induced_subgraph(h, *subset)));
}

inline bool is_h_perfect_line(const Multigraph& h, const DecideOptions& opts = {}) {
    return decide_line_nplus_perfect(h, opts).perfect();
}

} // namespace nplus
