#pragma once

#include "nplus/multigraph.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string>

namespace nplus {

/// Edge list: first line "n m", then m lines "u v" (0-based). Repeated pairs give parallel
/// edges. Blank lines and lines starting with '#' are skipped.
inline Multigraph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next = [&](std::istringstream& fields) {
        while (std::getline(in, line)) {
            ++lineno;
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            fields = std::istringstream(line);
            return true;
        }
        return false;
    };
    auto fail = [&](const std::string& what) { return InputError("line " + std::to_string(lineno) + ": " + what); };

    std::istringstream fields;
    if (!next(fields)) throw InputError("empty edge list");
    long long n = -1, m = -1;
    if (!(fields >> n >> m) || n < 0 || m < 0) throw fail("expected header 'n m'");
    std::string extra;
    if (fields >> extra) throw fail("trailing text after header");
    Multigraph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next(fields)) throw InputError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        long long u = -1, v = -1;
        if (!(fields >> u >> v)) throw fail("expected 'u v'");
        if (fields >> extra) throw fail("trailing text after edge");
        if (u < 0 || v < 0 || u >= n || v >= n) throw fail("node out of range");
        if (u == v) throw fail("loops are not allowed");
        g.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    std::istringstream rest;
    if (next(rest)) throw fail("more edges than the header announces");
    return g;
}

inline Multigraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline Multigraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_edge_list(in);
}

/// Edges in id order.
inline void write_edge_list(std::ostream& out, const Multigraph& g) {
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string format_edge_list(const Multigraph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

} // namespace nplus
