#pragma once

#include "nplus/isomorphism.hpp"
#include "nplus/linegraph.hpp"
#include "nplus/matching.hpp"
#include "nplus/multigraph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nplus {

using Integer = boost::multiprecision::cpp_int;

/// a . x <= b over integers, divided through by the gcd of all entries. Orientation is part of
/// the meaning (nonnegativity reads -x_i <= 0), so only the common factor is removed.
struct Inequality {
    std::vector<Integer> a;
    Integer b;

    Inequality() = default;
    Inequality(std::vector<Integer> coeffs, Integer rhs) : a(std::move(coeffs)), b(std::move(rhs)) { normalize(); }

    static Inequality rank(int n, std::span<const NodeId> support, long long rhs) {
        std::vector<Integer> a(static_cast<std::size_t>(n), 0);
        for (NodeId v : support) a[static_cast<std::size_t>(v)] = 1;
        return Inequality(std::move(a), rhs);
    }
    static Inequality nonnegative(int n, NodeId v) {
        std::vector<Integer> a(static_cast<std::size_t>(n), 0);
        a[static_cast<std::size_t>(v)] = -1;
        return Inequality(std::move(a), 0);
    }

    void normalize() {
        Integer g = abs(b);
        for (const Integer& x : a) g = gcd(g, abs(x));
        if (g > 1) {
            for (Integer& x : a) x /= g;
            b /= g;
        }
    }

    int size() const { return static_cast<int>(a.size()); }

    std::vector<NodeId> support() const {
        std::vector<NodeId> s;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0) s.push_back(static_cast<NodeId>(i));
        return s;
    }

    /// b - a . x for a 0/1 point given as a node mask.
    Integer slack(NodeMask x) const {
        Integer s = b;
        for (; x; x &= x - 1) s -= a[static_cast<std::size_t>(std::countr_zero(x))];
        return s;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            Integer c = a[i];
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (abs(c) != 1) os << abs(c) << " ";
            os << "x" << i;
            first = false;
        }
        if (first) os << "0";
        os << " <= " << b;
        return os.str();
    }

    friend bool operator==(const Inequality&, const Inequality&) = default;
    friend bool operator<(const Inequality& x, const Inequality& y) {
        if (x.b != y.b) return x.b < y.b;
        return x.a < y.a;
    }
};

struct PolytopeLimits {
    int stable_set_nodes = 24;
    int facet_nodes = 14;
    int rank_nodes = 16;
};

/// All stable sets as node masks (the empty set included), in increasing mask order.
inline std::vector<NodeMask> enumerate_stable_sets(const Multigraph& g, const PolytopeLimits& limits = {}) {
    if (g.node_count() > limits.stable_set_nodes)
        throw ResourceError("stable set enumeration limited to " + std::to_string(limits.stable_set_nodes) + " nodes");
    std::vector<NodeMask> nbr;
    for (NodeId v = 0; v < g.node_count(); ++v) nbr.push_back(g.neighbor_mask(v));
    std::vector<NodeMask> out;
    const int n = g.node_count();
    // Extend by nodes larger than the current maximum, skipping neighbours.
    std::vector<std::pair<NodeMask, int>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [s, from] = stack.back();
        stack.pop_back();
        out.push_back(s);
        NodeMask blocked = 0;
        for (NodeMask r = s; r; r &= r - 1) blocked |= nbr[static_cast<std::size_t>(std::countr_zero(r))];
        for (int v = n - 1; v >= from; --v)
            if (!((blocked >> v) & 1U)) stack.emplace_back(s | (NodeMask{1} << v), v + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline int alpha_of(const std::vector<NodeMask>& nbr, NodeMask s) {
    if (!s) return 0;
    int best_v = -1, best_deg = -1;
    for (NodeMask r = s; r; r &= r - 1) {
        int v = std::countr_zero(r);
        int d = std::popcount(nbr[static_cast<std::size_t>(v)] & s);
        if (d > best_deg) {
            best_deg = d;
            best_v = v;
        }
    }
    if (best_deg == 0) return std::popcount(s);
    const NodeMask bit = NodeMask{1} << best_v;
    int with = 1 + alpha_of(nbr, s & ~bit & ~nbr[static_cast<std::size_t>(best_v)]);
    int without = alpha_of(nbr, s & ~bit);
    return std::max(with, without);
}

} // namespace detail

/// Stability number.
inline int alpha(const Multigraph& g, const PolytopeLimits& limits = {}) {
    if (g.node_count() > limits.stable_set_nodes)
        throw ResourceError("stability number limited to " + std::to_string(limits.stable_set_nodes) + " nodes");
    std::vector<NodeMask> nbr;
    for (NodeId v = 0; v < g.node_count(); ++v) nbr.push_back(g.neighbor_mask(v));
    return detail::alpha_of(nbr, all_nodes_mask(g.node_count()));
}

namespace detail {

class Bits {
public:
    explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
    void set(std::size_t i) {
        if (i / 64 >= w_.size()) w_.resize(i / 64 + 1, 0);
        w_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    Bits operator&(const Bits& o) const {
        Bits r;
        r.w_.resize(std::min(w_.size(), o.w_.size()));
        for (std::size_t i = 0; i < r.w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t other = i < o.w_.size() ? o.w_[i] : 0;
            if (w_[i] & ~other) return false;
        }
        return true;
    }

private:
    std::vector<std::uint64_t> w_;
};

struct Ray {
    std::vector<Integer> y;  // (b, a_0, ..., a_{n-1})
    Bits zeros;              // processed constraints tight at this ray
};

inline void reduce(std::vector<Integer>& y) {
    Integer g = 0;
    for (const Integer& x : y) g = gcd(g, abs(x));
    if (g > 1)
        for (Integer& x : y) x /= g;
}

// Rank of a set of integer rows, by fraction-free elimination.
class RowSpace {
public:
    explicit RowSpace(int dim) : dim_(dim) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    bool add(std::vector<Integer> r) {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const int p = pivots_[k];
            if (r[static_cast<std::size_t>(p)] == 0) continue;
            Integer f = r[static_cast<std::size_t>(p)], g = rows_[k][static_cast<std::size_t>(p)];
            for (int j = 0; j < dim_; ++j) r[static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(j)] * g - rows_[k][static_cast<std::size_t>(j)] * f;
            reduce(r);
        }
        auto it = std::find_if(r.begin(), r.end(), [](const Integer& x) { return x != 0; });
        if (it == r.end()) return false;
        pivots_.push_back(static_cast<int>(it - r.begin()));
        rows_.push_back(std::move(r));
        return true;
    }

private:
    int dim_;
    std::vector<std::vector<Integer>> rows_;
    std::vector<int> pivots_;
};

} // namespace detail

/// Complete irredundant facet list of STAB(g) by the double description method on the
/// homogenised cone {(b, a) : a.x <= b for every stable set x}. The empty set and the unit
/// vectors give the initial simplicial cone, so the polytope is full-dimensional by
/// construction; this is asserted on the final ray set.
inline std::vector<Inequality> stab_facets(const Multigraph& g, const PolytopeLimits& limits = {}) {
    const int n = g.node_count();
    if (n > limits.facet_nodes) throw ResourceError("facet enumeration limited to " + std::to_string(limits.facet_nodes) + " nodes");
    if (n == 0) return {};
    std::vector<NodeMask> sets = enumerate_stable_sets(g, limits);
    std::stable_sort(sets.begin(), sets.end(), [](NodeMask x, NodeMask y) { return std::popcount(x) < std::popcount(y); });
    const std::size_t dim = static_cast<std::size_t>(n) + 1;

    // Constraint j is "b - sum_{i in sets[j]} a_i >= 0"; sets[0] = {}, sets[1..n] = {0}..{n-1}.
    auto value = [&](const detail::Ray& r, NodeMask s) {
        Integer v = r.y[0];
        for (; s; s &= s - 1) v -= r.y[static_cast<std::size_t>(std::countr_zero(s)) + 1];
        return v;
    };

    std::vector<detail::Ray> rays;
    {
        detail::Ray all_ones{std::vector<Integer>(dim, 1), detail::Bits(sets.size())};
        for (int i = 0; i < n; ++i) all_ones.zeros.set(static_cast<std::size_t>(i) + 1);
        rays.push_back(std::move(all_ones));
        for (int i = 0; i < n; ++i) {
            detail::Ray r{std::vector<Integer>(dim, 0), detail::Bits(sets.size())};
            r.y[static_cast<std::size_t>(i) + 1] = -1;
            r.zeros.set(0);
            for (int j = 0; j < n; ++j)
                if (j != i) r.zeros.set(static_cast<std::size_t>(j) + 1);
            rays.push_back(std::move(r));
        }
    }

    const std::size_t need_common = dim - 2;
    for (std::size_t c = dim; c < sets.size(); ++c) {
        const NodeMask s = sets[c];
        std::vector<Integer> val;
        val.reserve(rays.size());
        for (const auto& r : rays) val.push_back(value(r, s));
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] > 0) pos.push_back(i);
            else if (val[i] < 0) neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (val[i] == 0) rays[i].zeros.set(c);
            continue;
        }
        std::vector<detail::Ray> next;
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                detail::Bits common = rays[p].zeros & rays[q].zeros;
                if (common.count() < need_common) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && common.subset_of(rays[r].zeros)) adjacent = false;
                if (!adjacent) continue;
                detail::Ray nr{std::vector<Integer>(dim), std::move(common)};
                const Integer& vp = val[p];
                const Integer vq = -val[q];
                for (std::size_t j = 0; j < dim; ++j) nr.y[j] = vp * rays[q].y[j] + vq * rays[p].y[j];
                detail::reduce(nr.y);
                nr.zeros.set(c);
                next.push_back(std::move(nr));
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] < 0) continue;
            if (val[i] == 0) rays[i].zeros.set(c);
            next.push_back(std::move(rays[i]));
        }
        rays = std::move(next);
    }

    std::vector<Inequality> out;
    for (auto& r : rays) {
        std::vector<Integer> a(r.y.begin() + 1, r.y.end());
        out.emplace_back(std::move(a), r.y[0]);
    }
    if (static_cast<int>(out.size()) < n + 1) throw std::logic_error("stable set polytope is not full-dimensional");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Valid for every stable set and tight at n affinely independent ones.
inline bool is_facet(const Inequality& f, std::span<const NodeMask> stable_sets, int n) {
    if (f.size() != n) return false;
    detail::RowSpace space(n + 1);
    for (NodeMask s : stable_sets) {
        Integer sl = f.slack(s);
        if (sl < 0) return false;
        if (sl == 0 && space.rank() < n) {
            std::vector<Integer> row(static_cast<std::size_t>(n) + 1, 0);
            row[0] = 1;
            for (NodeMask r = s; r; r &= r - 1) row[static_cast<std::size_t>(std::countr_zero(r)) + 1] = 1;
            space.add(std::move(row));
        }
    }
    return space.rank() >= n;
}

enum class FacetKind { Nonnegativity, Clique, OddHoleRank, HypomatchableLineRank, FullRank, JoinedAntiweb, Other };

inline const char* to_string(FacetKind k) {
    switch (k) {
    case FacetKind::Nonnegativity: return "nonnegativity";
    case FacetKind::Clique: return "clique";
    case FacetKind::OddHoleRank: return "odd_hole_rank";
    case FacetKind::HypomatchableLineRank: return "hypomatchable_line_rank";
    case FacetKind::FullRank: return "full_rank";
    case FacetKind::JoinedAntiweb: return "joined_antiweb";
    case FacetKind::Other: return "other";
    }
    return "?";
}

struct AntiwebPart {
    std::vector<NodeId> nodes;
    int n = 0;
    int k = 0;
    int alpha = 0;
};

/// Classification tag with the data needed to re-check it.
struct FacetClass {
    FacetKind kind = FacetKind::Other;
    std::vector<NodeId> support;
    std::vector<NodeId> cycle;               // odd hole in cyclic order
    std::vector<NodeId> root_nodes;          // V(H') in root labels
    std::vector<EdgeId> root_edges;          // E(H')
    std::vector<NodeId> clique_part;         // Q of a joined antiweb constraint
    std::vector<AntiwebPart> antiweb_parts;  // A_1..A_k of a joined antiweb constraint
    int rank = 0;                            // right-hand side for rank-type classes
};

/// Root graph whose line graph is the analysed graph: node i of the analysed graph stands for
/// root edge node_to_edge[i].
struct RootMap {
    Multigraph root;
    std::vector<EdgeId> node_to_edge;

    static RootMap of(const Multigraph& root) {
        return RootMap{root, line_graph(root).node_to_edge};
    }
};

namespace detail {

inline bool unit_coefficients(const Inequality& f, const std::vector<NodeId>& support) {
    return std::all_of(support.begin(), support.end(), [&](NodeId v) { return f.a[static_cast<std::size_t>(v)] == 1; });
}

inline std::vector<NodeId> cycle_order(const Multigraph& sub) {
    std::vector<NodeId> order{0};
    NodeId prev = -1, cur = 0;
    while (static_cast<int>(order.size()) < sub.node_count()) {
        for (NodeId w : sub.neighbors(cur))
            if (w != prev) {
                prev = cur;
                cur = w;
                break;
            }
        order.push_back(cur);
    }
    for (NodeId& v : order) v = sub.label(v);
    return order;
}

inline std::optional<FacetClass> match_hypomatchable_line(const Inequality& f, const std::vector<NodeId>& support, const RootMap& rm) {
    if (!unit_coefficients(f, support)) return std::nullopt;
    std::vector<EdgeId> edges;
    std::vector<NodeId> nodes;
    for (NodeId v : support) {
        EdgeId e = rm.node_to_edge.at(static_cast<std::size_t>(v));
        edges.push_back(e);
        nodes.push_back(rm.root.edge(e).u);
        nodes.push_back(rm.root.edge(e).v);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    const Multigraph sub = induced_subgraph(rm.root, std::span<const NodeId>(nodes));
    if (sub.edge_count() != static_cast<int>(edges.size())) return std::nullopt;
    if (f.b * 2 + 1 != static_cast<long long>(nodes.size())) return std::nullopt;
    if (!is_two_connected(sub) || !is_hypomatchable(sub)) return std::nullopt;
    FacetClass fc;
    fc.kind = FacetKind::HypomatchableLineRank;
    fc.support = support;
    for (NodeId v : nodes) fc.root_nodes.push_back(rm.root.label(v));
    fc.root_edges = edges;
    std::sort(fc.root_edges.begin(), fc.root_edges.end());
    fc.rank = static_cast<int>(f.b);
    return fc;
}

// Co-components (components of the complement) of g restricted to `nodes`.
inline std::vector<std::vector<NodeId>> co_components(const Multigraph& g, const std::vector<NodeId>& nodes) {
    std::vector<std::vector<NodeId>> out;
    std::vector<char> seen(nodes.size(), 0);
    for (std::size_t s = 0; s < nodes.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        std::vector<NodeId> comp;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            comp.push_back(nodes[x]);
            for (std::size_t y = 0; y < nodes.size(); ++y)
                if (!seen[y] && !g.adjacent(nodes[x], nodes[y])) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace detail

/// Antiweb A^k_n: nodes 0..n-1, ij an edge iff k <= |i-j| <= n-k.
inline Multigraph antiweb(int n, int k) {
    if (n < 1 || k < 1) throw InputError("antiweb needs n >= 1 and k >= 1");
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (k <= j - i && j - i <= n - k) g.add_edge(i, j);
    return g;
}

/// k + 1 and n relatively prime.
inline bool is_prime_antiweb(int n, int k) { return std::gcd(k + 1, n) == 1; }

namespace detail {

// Joined antiweb constraint: support = complete join of a clique Q (coefficient b) and prime
// antiwebs A_i (coefficient b / alpha(A_i)). Antiwebs with alpha >= 2 have connected
// complements, so the parts are exactly the co-components of the support; singletons form Q.
inline std::optional<FacetClass> match_joined_antiweb(const Multigraph& g, const Inequality& f, const std::vector<NodeId>& support) {
    if (f.b <= 0 || support.empty()) return std::nullopt;
    for (NodeId v : support)
        if (f.a[static_cast<std::size_t>(v)] <= 0) return std::nullopt;
    FacetClass fc;
    fc.kind = FacetKind::JoinedAntiweb;
    fc.support = support;
    for (const auto& comp : co_components(g, support)) {
        if (comp.size() == 1) {
            if (f.a[static_cast<std::size_t>(comp[0])] != f.b) return std::nullopt;
            fc.clique_part.push_back(comp[0]);
            continue;
        }
        const Integer& c = f.a[static_cast<std::size_t>(comp[0])];
        for (NodeId v : comp)
            if (f.a[static_cast<std::size_t>(v)] != c) return std::nullopt;
        const Multigraph part = induced_subgraph(g, std::span<const NodeId>(comp));
        const int n = part.node_count();
        const int a = alpha(part);
        if (c * a != f.b) return std::nullopt;
        std::optional<int> k_found;
        for (int k = 2; 2 * k <= n && !k_found; ++k)
            if (is_prime_antiweb(n, k) && are_isomorphic(part, antiweb(n, k))) k_found = k;
        if (!k_found) return std::nullopt;
        fc.antiweb_parts.push_back(AntiwebPart{comp, n, *k_found, a});
    }
    fc.rank = 1;
    return fc;
}

} // namespace detail

/// Caches the stable sets of one graph and answers facet questions about it.
class StabOracle {
public:
    explicit StabOracle(const Multigraph& g, PolytopeLimits limits = {})
        : g_(g), limits_(limits), sets_(enumerate_stable_sets(g, limits)) {}

    const Multigraph& graph() const { return g_; }
    std::span<const NodeMask> stable_sets() const { return sets_; }

    const std::vector<Inequality>& facets() {
        if (!facets_) facets_ = stab_facets(g_, limits_);
        return *facets_;
    }

    bool is_facet(const Inequality& f) const { return nplus::is_facet(f, sets_, g_.node_count()); }

    int alpha_of(std::span<const NodeId> nodes) const {
        return alpha(induced_subgraph(g_, nodes), limits_);
    }

    /// First matching class in the order nonnegativity, clique, odd hole rank, hypomatchable
    /// line rank (only with a root), full rank, joined antiweb, other.
    FacetClass classify(const Inequality& f, const RootMap* root = nullptr) const {
        if (!is_facet(f)) throw ContractError("facet", std::nullopt, "inequality " + f.str() + " is not facet-defining");
        const std::vector<NodeId> support = f.support();
        FacetClass fc;
        fc.support = support;
        if (support.size() == 1 && f.a[static_cast<std::size_t>(support[0])] < 0 && f.b == 0) {
            fc.kind = FacetKind::Nonnegativity;
            return fc;
        }
        const bool unit = detail::unit_coefficients(f, support);
        if (unit && f.b == 1 && is_clique(g_, support)) {
            fc.kind = FacetKind::Clique;
            fc.rank = 1;
            return fc;
        }
        if (unit) {
            const Multigraph sub = induced_subgraph(g_, std::span<const NodeId>(support));
            if (is_odd_hole(sub) && f.b * 2 + 1 == static_cast<long long>(support.size())) {
                fc.kind = FacetKind::OddHoleRank;
                fc.cycle = detail::cycle_order(sub);
                fc.rank = static_cast<int>(f.b);
                return fc;
            }
        }
        if (root) {
            if (auto m = detail::match_hypomatchable_line(f, support, *root)) return *m;
        }
        if (unit && static_cast<int>(support.size()) == g_.node_count() && f.b == alpha_of(support)) {
            fc.kind = FacetKind::FullRank;
            fc.rank = static_cast<int>(f.b);
            return fc;
        }
        if (auto m = detail::match_joined_antiweb(g_, f, support)) return *m;
        fc.kind = FacetKind::Other;
        return fc;
    }

    /// Hypomatchable line rank check independent of the classification order.
    std::optional<FacetClass> as_hypomatchable_line_rank(const Inequality& f, const RootMap& root) const {
        return detail::match_hypomatchable_line(f, f.support(), root);
    }

    std::optional<FacetClass> as_joined_antiweb(const Inequality& f) const {
        return detail::match_joined_antiweb(g_, f, f.support());
    }

private:
    Multigraph g_;
    PolytopeLimits limits_;
    std::vector<NodeMask> sets_;
    std::optional<std::vector<Inequality>> facets_;
};

inline FacetClass classify_facet(const Multigraph& g, const Inequality& f, const RootMap* root = nullptr,
                                 const PolytopeLimits& limits = {}) {
    return StabOracle(g, limits).classify(f, root);
}

struct ClassifiedFacet {
    Inequality inequality;
    FacetClass cls;
};

struct EdmondsReport {
    bool pass = true;
    std::vector<ClassifiedFacet> facets;
    std::map<std::string, int> class_counts;
    std::optional<Inequality> first_failure;
};

/// Facets of STAB(L(h)) classified against h: passes iff each is nonnegativity, a clique, or a
/// rank constraint of the line graph of a 2-connected hypomatchable induced subgraph of h.
inline EdmondsReport verify_edmonds_description(const Multigraph& h, const PolytopeLimits& limits = {}) {
    const RootMap rm = RootMap::of(h);
    const LineGraphResult lg = line_graph(h);
    StabOracle oracle(lg.graph, limits);
    EdmondsReport report;
    for (const Inequality& f : oracle.facets()) {
        FacetClass fc = oracle.classify(f, &rm);
        bool ok = fc.kind == FacetKind::Nonnegativity || fc.kind == FacetKind::Clique || fc.kind == FacetKind::HypomatchableLineRank;
        if (!ok && fc.kind == FacetKind::OddHoleRank) ok = oracle.as_hypomatchable_line_rank(f, rm).has_value();
        if (!ok && report.pass) {
            report.pass = false;
            report.first_failure = f;
        }
        ++report.class_counts[to_string(fc.kind)];
        report.facets.push_back({f, std::move(fc)});
    }
    return report;
}

/// Every facet is nonnegativity, a clique or an odd hole rank constraint.
inline bool is_h_perfect_by_facets(const Multigraph& g, const PolytopeLimits& limits = {}) {
    StabOracle oracle(g, limits);
    for (const Inequality& f : oracle.facets()) {
        FacetKind k = oracle.classify(f).kind;
        if (k != FacetKind::Nonnegativity && k != FacetKind::Clique && k != FacetKind::OddHoleRank) return false;
    }
    return true;
}

/// Every facet is nonnegativity or a joined antiweb constraint (cliques and odd holes included).
inline bool is_joined_a_perfect(const Multigraph& g, const PolytopeLimits& limits = {}) {
    StabOracle oracle(g, limits);
    for (const Inequality& f : oracle.facets()) {
        FacetKind k = oracle.classify(f).kind;
        if (k == FacetKind::Nonnegativity || k == FacetKind::JoinedAntiweb) continue;
        if (oracle.as_joined_antiweb(f)) continue;
        return false;
    }
    return true;
}

/// Nonnegativity plus one constraint per adjacent pair.
inline std::vector<Inequality> estab_constraints(const Multigraph& g) {
    std::vector<Inequality> out;
    const int n = g.node_count();
    for (NodeId v = 0; v < n; ++v) out.push_back(Inequality::nonnegative(n, v));
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) {
                const NodeId pair[] = {u, v};
                out.push_back(Inequality::rank(n, pair, 1));
            }
    return out;
}

/// Maximal cliques as sorted node lists (Bron-Kerbosch with pivoting).
inline std::vector<std::vector<NodeId>> maximal_cliques(const Multigraph& g) {
    g.require_mask_size();
    std::vector<NodeMask> nbr;
    for (NodeId v = 0; v < g.node_count(); ++v) nbr.push_back(g.neighbor_mask(v));
    std::vector<std::vector<NodeId>> out;
    auto rec = [&](auto&& self, NodeMask r, NodeMask p, NodeMask x) -> void {
        if (!p && !x) {
            out.push_back(nodes_of(r));
            return;
        }
        NodeMask px = p | x;
        int pivot = std::countr_zero(px);
        for (NodeMask c = p & ~nbr[static_cast<std::size_t>(pivot)]; c; c &= c - 1) {
            int v = std::countr_zero(c);
            NodeMask bit = NodeMask{1} << v;
            self(self, r | bit, p & nbr[static_cast<std::size_t>(v)], x & nbr[static_cast<std::size_t>(v)]);
            p &= ~bit;
            x |= bit;
        }
    };
    if (g.node_count() > 0) rec(rec, 0, all_nodes_mask(g.node_count()), 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Nonnegativity plus one constraint per maximal clique.
inline std::vector<Inequality> qstab_constraints(const Multigraph& g) {
    std::vector<Inequality> out;
    const int n = g.node_count();
    for (NodeId v = 0; v < n; ++v) out.push_back(Inequality::nonnegative(n, v));
    for (const auto& q : maximal_cliques(g)) out.push_back(Inequality::rank(n, q, 1));
    return out;
}

/// x(S) <= alpha(S) for every nonempty node subset S.
inline std::vector<Inequality> rstab_constraints(const Multigraph& g, const PolytopeLimits& limits = {}) {
    const int n = g.node_count();
    if (n > limits.rank_nodes) throw ResourceError("rank constraints limited to " + std::to_string(limits.rank_nodes) + " nodes");
    std::vector<NodeMask> nbr;
    for (NodeId v = 0; v < n; ++v) nbr.push_back(g.neighbor_mask(v));
    std::vector<Inequality> out;
    for (NodeMask s = 1; s <= all_nodes_mask(n) && s != 0; ++s) {
        auto nodes = nodes_of(s);
        out.push_back(Inequality::rank(n, nodes, detail::alpha_of(nbr, s)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace nplus
