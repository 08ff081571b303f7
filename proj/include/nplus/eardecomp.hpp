#pragma once

#include "nplus/matching.hpp"
#include "nplus/multigraph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace nplus {

/// Odd path p0..pl attached by its endpoints to the previous stage; internal nodes are new.
/// A short ear (l = 1) is a single edge, possibly parallel to an existing one.
struct Ear {
    std::vector<NodeId> path;
    std::vector<EdgeId> edges;  // edges[i] joins path[i] and path[i+1]

    int length() const { return static_cast<int>(path.size()) - 1; }
    bool is_long() const { return length() >= 3; }
    NodeId first() const { return path.front(); }
    NodeId last() const { return path.back(); }
};

/// Initial odd cycle plus ears. cycle_edges[i] joins cycle[i] and cycle[(i+1) % size].
struct EarDecomposition {
    std::vector<NodeId> cycle;
    std::vector<EdgeId> cycle_edges;
    std::vector<Ear> ears;

    int node_count() const {
        int n = static_cast<int>(cycle.size());
        for (const Ear& e : ears) n += std::max(0, e.length() - 1);
        return n;
    }
};

/// Stage H_i (i = 0 is the initial cycle) as a multigraph; node labels are the node ids used
/// in the decomposition, nodes numbered in order of appearance.
inline Multigraph stage_graph(const EarDecomposition& d, int stage) {
    if (stage < 0 || stage > static_cast<int>(d.ears.size())) throw InputError("stage index out of range");
    std::vector<NodeId> order;
    std::map<NodeId, int> pos;
    auto touch = [&](NodeId v) {
        if (pos.emplace(v, static_cast<int>(order.size())).second) order.push_back(v);
    };
    std::vector<std::tuple<EdgeId, NodeId, NodeId>> edges;
    const std::size_t k = d.cycle.size();
    for (std::size_t i = 0; i < k; ++i) {
        touch(d.cycle[i]);
        edges.emplace_back(d.cycle_edges.at(i), d.cycle[i], d.cycle[(i + 1) % k]);
    }
    for (int s = 0; s < stage; ++s) {
        const Ear& ear = d.ears[static_cast<std::size_t>(s)];
        for (NodeId v : ear.path) touch(v);
        for (std::size_t i = 0; i + 1 < ear.path.size(); ++i) edges.emplace_back(ear.edges.at(i), ear.path[i], ear.path[i + 1]);
    }
    Multigraph g(static_cast<int>(order.size()));
    for (auto [id, u, v] : edges) g.add_edge_with_id(id, pos[u], pos[v]);
    g.set_labels(order);
    return g;
}

struct DecompositionCheck {
    bool valid = true;
    std::vector<std::string> reasons;

    explicit operator bool() const { return valid; }
    bool has(const std::string& reason) const { return std::find(reasons.begin(), reasons.end(), reason) != reasons.end(); }
    void fail(const std::string& reason) {
        valid = false;
        if (!has(reason)) reasons.push_back(reason);
    }
};

/// Checks every structural requirement of an ear decomposition of `h`. Reasons are stable
/// tokens: "bad cycle", "cycle edge mismatch", "even ear", "ear edge mismatch",
/// "ear endpoint outside stage", "ear internal node reused", "edge reused", "edge coverage",
/// "node coverage", "stage not 2-connected".
inline DecompositionCheck validate_decomposition(const Multigraph& h, const EarDecomposition& d, bool require_two_connected) {
    DecompositionCheck check;
    std::set<NodeId> stage_nodes;
    std::set<EdgeId> used;
    auto use_edge = [&](EdgeId id, NodeId a, NodeId b, const char* mismatch) {
        if (!h.has_edge(id) || !h.edge(id).joins(a, b)) check.fail(mismatch);
        if (!used.insert(id).second) check.fail("edge reused");
    };

    const std::size_t k = d.cycle.size();
    if (k < 3 || k % 2 == 0) check.fail("bad cycle");
    for (NodeId v : d.cycle)
        if (!h.has_node(v) || !stage_nodes.insert(v).second) check.fail("bad cycle");
    if (d.cycle_edges.size() != k) {
        check.fail("cycle edge mismatch");
        return check;
    }
    for (std::size_t i = 0; i < k; ++i) use_edge(d.cycle_edges[i], d.cycle[i], d.cycle[(i + 1) % k], "cycle edge mismatch");

    for (const Ear& ear : d.ears) {
        if (ear.path.size() < 2 || ear.edges.size() + 1 != ear.path.size()) {
            check.fail("ear edge mismatch");
            continue;
        }
        if (ear.length() % 2 == 0) check.fail("even ear");
        if (!stage_nodes.contains(ear.first()) || !stage_nodes.contains(ear.last())) check.fail("ear endpoint outside stage");
        std::set<NodeId> internal;
        for (std::size_t i = 1; i + 1 < ear.path.size(); ++i) {
            NodeId v = ear.path[i];
            if (!h.has_node(v) || stage_nodes.contains(v) || !internal.insert(v).second) check.fail("ear internal node reused");
        }
        for (std::size_t i = 0; i + 1 < ear.path.size(); ++i) use_edge(ear.edges[i], ear.path[i], ear.path[i + 1], "ear edge mismatch");
        stage_nodes.insert(internal.begin(), internal.end());
    }

    if (static_cast<int>(used.size()) != h.edge_count()) check.fail("edge coverage");
    for (const Edge& e : h.edges())
        if (!used.contains(e.id)) check.fail("edge coverage");
    if (static_cast<int>(stage_nodes.size()) != h.node_count()) check.fail("node coverage");

    if (require_two_connected && check.valid) {
        for (int s = 0; s <= static_cast<int>(d.ears.size()); ++s)
            if (!is_two_connected(stage_graph(d, s))) {
                check.fail("stage not 2-connected");
                break;
            }
    }
    return check;
}

namespace detail {

// Search over stage node sets. Once a node set is reached, the edges inside it can always be
// added later as short ears, so success depends only on the set; failures are memoised.
class EarSearch {
public:
    EarSearch(const Multigraph& h, bool distinct_endpoints)
        : h_(h), distinct_(distinct_endpoints), full_(all_nodes_mask(h.node_count())) {
        h.require_mask_size();
        for (NodeId v = 0; v < h.node_count(); ++v) nbr_.push_back(h.neighbor_mask(v));
    }

    struct Plan {
        std::vector<NodeId> cycle;
        std::vector<std::vector<NodeId>> long_ears;
    };

    std::optional<Plan> run() {
        const int n = h_.node_count();
        Plan plan;
        for (int len = 3; len <= n; len += 2) {
            for (NodeId s = 0; s < n; ++s) {
                std::vector<NodeId> path{s};
                bool found = cycles_from(s, len, path, [&](const std::vector<NodeId>& cyc) {
                    plan.long_ears.clear();
                    if (!extend(mask_of(cyc), plan.long_ears)) return false;
                    plan.cycle = cyc;
                    return true;
                });
                if (found) return plan;
            }
        }
        return std::nullopt;
    }

private:
    bool bit(NodeMask m, NodeId v) const { return (m >> v) & 1U; }

    // Odd cycles through s whose other nodes exceed s; orientation fixed by path[1] < path.back().
    template <class Visit>
    bool cycles_from(NodeId s, int len, std::vector<NodeId>& path, Visit&& visit) {
        const NodeId x = path.back();
        if (static_cast<int>(path.size()) == len) {
            if (!bit(nbr_[static_cast<std::size_t>(x)], s) || path[1] > path.back()) return false;
            return visit(path);
        }
        NodeMask cand = nbr_[static_cast<std::size_t>(x)] & ~mask_of(path) & ~((NodeMask{2} << s) - 1);
        for (NodeId y : nodes_of(cand)) {
            path.push_back(y);
            bool done = cycles_from(s, len, path, visit);
            path.pop_back();
            if (done) return true;
        }
        return false;
    }

    bool extend(NodeMask s, std::vector<std::vector<NodeId>>& ears) {
        if (s == full_) return true;
        if (failed_.contains(s)) return false;
        const NodeMask outside = full_ & ~s;
        const int max_len = std::popcount(outside) + 1;
        for (NodeId a : nodes_of(s)) {
            if ((nbr_[static_cast<std::size_t>(a)] & outside) == 0) continue;
            for (NodeId b : nodes_of(s)) {
                if (b < a || (distinct_ && b == a)) continue;
                if ((nbr_[static_cast<std::size_t>(b)] & outside) == 0) continue;
                for (int len = 3; len <= max_len; len += 2) {
                    std::vector<NodeId> path{a};
                    bool done = ear_paths(b, len, outside, path, [&](const std::vector<NodeId>& ear) {
                        NodeMask internal = 0;
                        for (std::size_t i = 1; i + 1 < ear.size(); ++i) internal |= NodeMask{1} << ear[i];
                        ears.push_back(ear);
                        if (extend(s | internal, ears)) return true;
                        ears.pop_back();
                        return false;
                    });
                    if (done) return true;
                }
            }
        }
        failed_.insert(s);
        return false;
    }

    template <class Visit>
    bool ear_paths(NodeId target, int len, NodeMask outside, std::vector<NodeId>& path, Visit&& visit) {
        const NodeId x = path.back();
        const int edges_so_far = static_cast<int>(path.size()) - 1;
        if (edges_so_far == len - 1) {
            if (!bit(nbr_[static_cast<std::size_t>(x)], target)) return false;
            path.push_back(target);
            bool done = visit(path);
            path.pop_back();
            return done;
        }
        NodeMask used = mask_of(path);
        NodeMask cand = nbr_[static_cast<std::size_t>(x)] & outside & ~used;
        for (NodeId y : nodes_of(cand)) {
            path.push_back(y);
            bool done = ear_paths(target, len, outside, path, visit);
            path.pop_back();
            if (done) return true;
        }
        return false;
    }

    const Multigraph& h_;
    bool distinct_;
    NodeMask full_;
    std::vector<NodeMask> nbr_;
    std::unordered_set<NodeMask> failed_;
};

// Turns a plan (cycle + long ear node paths) into a decomposition that uses every edge:
// edges inside the current stage are appended as short ears right after each stage is formed.
inline EarDecomposition assemble(const Multigraph& h, const EarSearch::Plan& plan) {
    EarDecomposition d;
    std::set<EdgeId> used;
    auto pick = [&](NodeId a, NodeId b) {
        EdgeId best = -1;
        for (EdgeId id : h.incident_edges(a))
            if (!used.contains(id) && h.edge(id).joins(a, b) && (best < 0 || id < best)) best = id;
        if (best < 0) throw std::logic_error("ear search produced a path over a missing edge");
        used.insert(best);
        return best;
    };
    NodeMask stage = 0;
    auto add_short_ears = [&] {
        std::vector<Edge> inside;
        for (const Edge& e : h.edges())
            if (!used.contains(e.id) && ((stage >> e.u) & 1U) && ((stage >> e.v) & 1U)) inside.push_back(e);
        std::sort(inside.begin(), inside.end(), [](const Edge& x, const Edge& y) {
            return std::tuple(std::min(x.u, x.v), std::max(x.u, x.v), x.id) < std::tuple(std::min(y.u, y.v), std::max(y.u, y.v), y.id);
        });
        for (const Edge& e : inside) {
            used.insert(e.id);
            d.ears.push_back(Ear{{std::min(e.u, e.v), std::max(e.u, e.v)}, {e.id}});
        }
    };

    d.cycle = plan.cycle;
    for (std::size_t i = 0; i < d.cycle.size(); ++i) d.cycle_edges.push_back(pick(d.cycle[i], d.cycle[(i + 1) % d.cycle.size()]));
    stage = mask_of(d.cycle);
    add_short_ears();
    for (const auto& path : plan.long_ears) {
        Ear ear{path, {}};
        for (std::size_t i = 0; i + 1 < path.size(); ++i) ear.edges.push_back(pick(path[i], path[i + 1]));
        stage |= mask_of(path);
        d.ears.push_back(std::move(ear));
        add_short_ears();
    }
    return d;
}

} // namespace detail

/// Odd ear decomposition of a hypomatchable multigraph; ears may close on a single node.
/// Preference: shortest initial cycle, then lexicographically smallest endpoint pair, then
/// shortest ear.
inline EarDecomposition ear_decomposition(const Multigraph& h) {
    if (h.node_count() % 2 == 0)
        throw ContractError("hypomatchable", h.node_count() > 0 ? std::optional<int>(0) : std::nullopt,
                            "ear decomposition needs a hypomatchable graph (even order)");
    if (NodeId v = hypomatchability_violation(h); v >= 0)
        throw ContractError("hypomatchable", v, "ear decomposition needs a hypomatchable graph: H - " + std::to_string(v) + " has no perfect matching");
    if (h.node_count() < 3) throw InputError("a single node has no odd cycle to start from");
    detail::EarSearch search(h, false);
    auto plan = search.run();
    if (!plan) throw std::logic_error("no ear decomposition found for a hypomatchable graph");
    return detail::assemble(h, *plan);
}

/// Odd ear decomposition in which every stage is 2-connected (every long ear has two
/// distinct endpoints).
inline EarDecomposition two_connected_ear_decomposition(const Multigraph& h) {
    if (!is_two_connected(h)) {
        NodeId cut = find_cut_node(h);
        throw ContractError("two_connected", cut >= 0 ? std::optional<int>(cut) : std::nullopt, "graph is not 2-connected");
    }
    if (NodeId v = hypomatchability_violation(h); v >= 0 || h.node_count() % 2 == 0)
        throw ContractError("hypomatchable", std::max(v, 0), "graph is not hypomatchable");
    detail::EarSearch search(h, true);
    auto plan = search.run();
    if (!plan) throw std::logic_error("no 2-connected ear decomposition found for a 2-connected hypomatchable graph");
    return detail::assemble(h, *plan);
}

/// Rewrites a 2-connected-stage decomposition so the initial cycle has at least five nodes.
/// With a triangle start and first long ear E_i (ends v != v'), the result is
/// (H0 - vv') + E_i, then the short ear vv', then E_1..E_{i-1}, then E_{i+1}..E_k.
inline EarDecomposition normalize_ear_decomposition(const EarDecomposition& d) {
    if (d.node_count() < 5) throw InputError("normalization needs a graph with at least five nodes");
    if (d.cycle.size() >= 5) return d;
    if (d.cycle.size() != 3 || d.cycle_edges.size() != 3) throw ContractError("odd_cycle", std::nullopt, "initial stage is not an odd cycle");

    auto first_long = std::find_if(d.ears.begin(), d.ears.end(), [](const Ear& e) { return e.is_long(); });
    if (first_long == d.ears.end()) throw std::logic_error("more than three nodes but no long ear");
    const std::set<NodeId> tri(d.cycle.begin(), d.cycle.end());
    for (auto it = d.ears.begin(); it != first_long; ++it)
        if (!tri.contains(it->first()) || !tri.contains(it->last()))
            throw std::logic_error("short ear before the first long ear leaves the initial triangle");

    const Ear& ear = *first_long;
    const NodeId v = ear.first(), vp = ear.last();
    if (v == vp || !tri.contains(v) || !tri.contains(vp))
        throw ContractError("two_connected_stages", v, "first long ear must join two distinct triangle nodes");

    // Locate triangle edges: vv' is removed from the cycle, the path v' - w - v stays.
    EdgeId e_vvp = -1, e_vpw = -1, e_wv = -1;
    NodeId w = -1;
    for (NodeId x : d.cycle)
        if (x != v && x != vp) w = x;
    for (std::size_t i = 0; i < 3; ++i) {
        NodeId a = d.cycle[i], b = d.cycle[(i + 1) % 3];
        auto is = [&](NodeId p, NodeId q) { return (a == p && b == q) || (a == q && b == p); };
        if (is(v, vp)) e_vvp = d.cycle_edges[i];
        else if (is(vp, w)) e_vpw = d.cycle_edges[i];
        else if (is(w, v)) e_wv = d.cycle_edges[i];
    }

    EarDecomposition out;
    out.cycle = ear.path;
    out.cycle_edges = ear.edges;
    out.cycle.push_back(w);
    out.cycle_edges.push_back(e_vpw);
    out.cycle_edges.push_back(e_wv);
    out.ears.push_back(Ear{{v, vp}, {e_vvp}});
    for (auto it = d.ears.begin(); it != d.ears.end(); ++it)
        if (it != first_long) out.ears.push_back(*it);
    return out;
}

} // namespace nplus
