#pragma once

// Brute-force reference implementations. Deliberately naive: they share no code with the
// library beyond the Multigraph container.

#include "nplus/multigraph.hpp"
#include "nplus/polytope.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using nplus::Multigraph;
using nplus::NodeId;
using Rational = boost::multiprecision::cpp_rational;

inline std::vector<std::vector<int>> multiplicity_matrix(const Multigraph& g) {
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges()) {
        ++m[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
        ++m[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
    }
    return m;
}

/// Tries every bijection.
inline bool isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
    const auto ma = multiplicity_matrix(a), mb = multiplicity_matrix(b);
    std::vector<int> p(static_cast<std::size_t>(a.node_count()));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i)
            for (std::size_t j = 0; j < p.size() && ok; ++j)
                ok = ma[i][j] == mb[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(p[j])];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Every 2-colouring.
inline bool bipartite(const Multigraph& g) {
    const int n = g.node_count();
    for (unsigned long c = 0; c < (1UL << n); ++c) {
        bool ok = true;
        for (const auto& e : g.edges()) ok = ok && (((c >> e.u) & 1U) != ((c >> e.v) & 1U));
        if (ok) return true;
    }
    return n == 0;
}

/// Largest matching by branching on the lowest node: leave it out, or match it to a neighbour.
inline int max_matching_size(const Multigraph& g) {
    const int n = g.node_count();
    const auto m = multiplicity_matrix(g);
    std::function<int(unsigned long)> best = [&](unsigned long free) -> int {
        if (!free) return 0;
        const int v = __builtin_ctzl(free);
        const unsigned long rest = free & ~(1UL << v);
        int r = best(rest);
        for (int w = 0; w < n; ++w)
            if (((rest >> w) & 1U) && m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] > 0)
                r = std::max(r, 1 + best(rest & ~(1UL << w)));
        return r;
    };
    return best(n == 0 ? 0UL : (1UL << n) - 1);
}

inline bool is_matching(const Multigraph& g, const std::vector<nplus::EdgeId>& edges) {
    std::vector<int> used(static_cast<std::size_t>(g.node_count()), 0);
    for (auto id : edges) {
        if (!g.has_edge(id)) return false;
        const auto& e = g.edge(id);
        if (used[static_cast<std::size_t>(e.u)]++ || used[static_cast<std::size_t>(e.v)]++) return false;
    }
    return true;
}

inline bool hypomatchable(const Multigraph& g) {
    const int n = g.node_count();
    if (n % 2 == 0) return false;
    for (NodeId v = 0; v < n; ++v)
        if (2 * max_matching_size(nplus::remove_node(g, v)) != n - 1) return false;
    return true;
}

/// Every subset, checked pair by pair.
inline std::vector<unsigned long> stable_sets(const Multigraph& g) {
    const auto m = multiplicity_matrix(g);
    const int n = g.node_count();
    std::vector<unsigned long> out;
    for (unsigned long s = 0; s < (1UL << n); ++s) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (((s >> i) & 1U) && ((s >> j) & 1U) && m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ok = false;
        if (ok) out.push_back(s);
    }
    return out;
}

inline int alpha(const Multigraph& g) {
    int best = 0;
    for (auto s : stable_sets(g)) best = std::max(best, __builtin_popcountl(s));
    return best;
}

/// Odd cycle search by DFS over simple paths.
inline bool has_odd_cycle(const Multigraph& g) {
    const int n = g.node_count();
    const auto m = multiplicity_matrix(g);
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    std::function<bool(int, int, int)> walk = [&](int start, int v, int len) -> bool {
        for (int w = 0; w < n; ++w) {
            if (!m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) continue;
            if (w == start && len >= 3 && len % 2 == 1) return true;
            if (w <= start || on[static_cast<std::size_t>(w)]) continue;
            on[static_cast<std::size_t>(w)] = 1;
            if (walk(start, w, len + 1)) return true;
            on[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        std::fill(on.begin(), on.end(), 0);
        on[static_cast<std::size_t>(s)] = 1;
        if (walk(s, s, 1)) return true;
    }
    return false;
}

namespace detail {

// Unique solution of the square system, if any.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

} // namespace detail

/// Vertices of {x : a.x <= b for all given inequalities}, by solving every n-subset of them
/// with equality. Returns nullopt if some vertex is not a 0/1 point.
inline std::optional<std::vector<unsigned long>> integral_vertices(const std::vector<nplus::Inequality>& ineqs, int n) {
    std::vector<unsigned long> out;
    const std::size_t m = ineqs.size();
    std::vector<std::size_t> pick(static_cast<std::size_t>(n));
    std::iota(pick.begin(), pick.end(), 0);
    if (static_cast<std::size_t>(n) > m) return out;
    for (;;) {
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        for (std::size_t i : pick) {
            std::vector<Rational> row;
            for (const auto& x : ineqs[i].a) row.emplace_back(x);
            a.push_back(std::move(row));
            b.emplace_back(ineqs[i].b);
        }
        if (auto x = detail::solve(a, b)) {
            bool feasible = true;
            for (const auto& f : ineqs) {
                Rational lhs = 0;
                for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) lhs += Rational(f.a[j]) * (*x)[j];
                if (lhs > Rational(f.b)) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                unsigned long mask = 0;
                for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
                    if ((*x)[j] == 1) mask |= 1UL << j;
                    else if ((*x)[j] != 0) return std::nullopt;
                }
                out.push_back(mask);
            }
        }
        int i = n - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - static_cast<std::size_t>(n) + static_cast<std::size_t>(i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace oracle
