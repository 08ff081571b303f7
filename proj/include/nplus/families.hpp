#pragma once

#include "nplus/linegraph.hpp"
#include "nplus/multigraph.hpp"
#include "nplus/polytope.hpp"

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace nplus {

/// C_{2k+1} on nodes 0..2k in natural order; edge i joins i and i+1.
inline Multigraph odd_hole(int k) {
    if (k < 2) throw InputError("odd hole needs k >= 2 (at least five nodes)");
    const int n = 2 * k + 1;
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

enum class HolePlus { Double, Chord, Path };

/// C_{2k+1} plus one extra structure between hole node 0 and hole node `span`:
///   Double: a parallel copy of edge 0-1 (span ignored);
///   Chord:  the edge 0-span, 2 <= span <= 2k-1;
///   Path:   an odd path of length ear_length >= 3 from 0 to span, 2 <= span <= 2k-1,
///           internal nodes numbered 2k+1, 2k+2, ... from the 0 end.
inline Multigraph odd_hole_plus(HolePlus kind, int k, int span = 2, int ear_length = 3) {
    Multigraph g = odd_hole(k);
    const int n = 2 * k + 1;
    if (kind == HolePlus::Double) {
        g.add_edge(0, 1);
        return g;
    }
    if (span < 2 || span > n - 2)
        throw InputError("endpoints must be non-adjacent on the hole: need 2 <= span <= " + std::to_string(n - 2));
    if (kind == HolePlus::Chord) {
        g.add_edge(0, span);
        return g;
    }
    if (ear_length % 2 == 0) throw InputError("the attached path must be odd; got length " + std::to_string(ear_length));
    if (ear_length < 3) throw InputError("the attached path must have length >= 3; use a chord for length 1");
    Multigraph out(n + ear_length - 1);
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
    NodeId prev = 0;
    for (int i = 0; i < ear_length - 1; ++i) {
        out.add_edge(prev, n + i);
        prev = n + i;
    }
    out.add_edge(prev, span);
    return out;
}

/// Edgeless antiwebs (2k > n) are legal but usually a parameter mistake.
inline bool is_degenerate_antiweb(int n, int k) { return 2 * k > n; }

/// Complement of the antiweb A^k_n.
inline Multigraph web(int n, int k) { return complement(antiweb(n, k)); }

/// Hub 2k+1 joined to every node of C_{2k+1}.
inline Multigraph odd_wheel(int k) {
    Multigraph g = odd_hole(k);
    const int n = 2 * k + 1;
    Multigraph out(n + 1);
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
    for (int i = 0; i < n; ++i) out.add_edge(n, i);
    return out;
}

/// Star K_{1,3}; node 0 is the centre.
inline Multigraph claw() { return Multigraph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}}); }

inline Multigraph glt() { return line_graph(odd_hole_plus(HolePlus::Double, 2)).graph; }
inline Multigraph gemn() { return line_graph(odd_hole_plus(HolePlus::Chord, 2, 2)).graph; }

/// g - N[v] is bipartite for every node v.
inline bool is_near_bipartite(const Multigraph& g) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::vector<NodeId> rest;
        for (NodeId w = 0; w < g.node_count(); ++w)
            if (w != v && !g.adjacent(v, w)) rest.push_back(w);
        if (!is_bipartite(induced_subgraph(g, std::span<const NodeId>(rest)))) return false;
    }
    return true;
}

/// Centre plus three pairwise non-adjacent neighbours, or nothing.
inline std::optional<std::array<NodeId, 4>> find_induced_claw(const Multigraph& g) {
    for (NodeId c = 0; c < g.node_count(); ++c) {
        const auto nb = g.neighbors(c);
        const std::size_t d = nb.size();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t l = j + 1; l < d; ++l)
                    if (!g.adjacent(nb[i], nb[l]) && !g.adjacent(nb[j], nb[l])) return std::array<NodeId, 4>{c, nb[i], nb[j], nb[l]};
            }
    }
    return std::nullopt;
}

/// Graph generator by name, as exposed on the command line.
struct FamilySpec {
    std::string kind;
    int k = 2;
    int n = 5;
    int span = 2;
    int ear_length = 3;
};

inline const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"odd-hole",       "odd-hole-plus-double", "odd-hole-plus-chord", "odd-hole-plus-path",
                                                "antiweb",        "web",                  "odd-wheel",           "glt",
                                                "gemn",           "claw"};
    return names;
}

inline Multigraph generate(const FamilySpec& s) {
    if (s.kind == "odd-hole") return odd_hole(s.k);
    if (s.kind == "odd-hole-plus-double") return odd_hole_plus(HolePlus::Double, s.k);
    if (s.kind == "odd-hole-plus-chord") return odd_hole_plus(HolePlus::Chord, s.k, s.span);
    if (s.kind == "odd-hole-plus-path") return odd_hole_plus(HolePlus::Path, s.k, s.span, s.ear_length);
    if (s.kind == "antiweb" || s.kind == "web") {
        if (s.n < 2 || s.k < 1) throw InputError("antiweb needs n >= 2 and k >= 1");
        return s.kind == "antiweb" ? antiweb(s.n, s.k) : web(s.n, s.k);
    }
    if (s.kind == "odd-wheel") return odd_wheel(s.k);
    if (s.kind == "glt") return glt();
    if (s.kind == "gemn") return gemn();
    if (s.kind == "claw") return claw();
    throw InputError("unknown family '" + s.kind + "'");
}

} // namespace nplus
