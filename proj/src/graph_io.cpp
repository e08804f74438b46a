#include "ttone/graph_io.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <vector>

#include "ttone/errors.hpp"

namespace ttone {

namespace {

// graph6 order field: one byte for n <= 62, '~' + 3 bytes for n <= 258047.
size_t read_g6_order(const std::string& s, int& n) {
    if (s.empty())
        throw input_error("graph6: empty string");
    unsigned char c0 = static_cast<unsigned char>(s[0]);
    if (c0 != 126) {
        if (c0 < 63 || c0 > 126)
            throw input_error("graph6: bad byte at offset 0");
        n = c0 - 63;
        return 1;
    }
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
        throw input_error("graph6: orders beyond 258047 are not supported");
    if (s.size() < 4)
        throw input_error("graph6: truncated order field");
    n = 0;
    for (size_t i = 1; i <= 3; ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw input_error("graph6: bad byte at offset " + std::to_string(i));
        n = (n << 6) | (c - 63);
    }
    return 4;
}

} // namespace

Multigraph parse_graph6(const std::string& text) {
    int n = 0;
    size_t pos = read_g6_order(text, n);
    size_t nbits = static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (text.size() != pos + nbytes)
        throw input_error("graph6: expected " + std::to_string(pos + nbytes) + " bytes, got " +
                          std::to_string(text.size()));

    std::vector<std::pair<int, int>> edges;
    size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char c = static_cast<unsigned char>(text[pos + bit / 6]);
            if (c < 63 || c > 126)
                throw input_error("graph6: bad byte at offset " + std::to_string(pos + bit / 6));
            int val = c - 63;
            if ((val >> (5 - bit % 6)) & 1)
                edges.push_back({i, j});
        }
    }
    // Padding bits must be zero.
    for (size_t b = nbits; b < nbytes * 6; ++b) {
        unsigned char c = static_cast<unsigned char>(text[pos + b / 6]);
        if (((c - 63) >> (5 - b % 6)) & 1)
            throw input_error("graph6: nonzero padding bit");
    }
    return Multigraph::from_edges(n, edges);
}

std::string to_graph6(const Multigraph& g) {
    if (!g.is_simple())
        throw unsupported_error("graph6 cannot encode parallel edges");
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    } else {
        throw unsupported_error("graph6: order too large");
    }

    std::vector<bool> adj(static_cast<size_t>(n) * static_cast<size_t>(n), false);
    for (const auto& ed : g.edges()) {
        adj[static_cast<size_t>(ed.u) * static_cast<size_t>(n) + static_cast<size_t>(ed.v)] = true;
        adj[static_cast<size_t>(ed.v) * static_cast<size_t>(n) + static_cast<size_t>(ed.u)] = true;
    }
    int acc = 0;
    int nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (adj[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0)
        out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

Multigraph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::pair<int, std::pair<int, int>>> rows; // (explicit id or -1, (u, v))
    bool any_id = false;
    bool any_bare = false;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::istringstream ls(line);
        long a = 0, b = 0, c = 0;
        if (!(ls >> a >> b))
            throw input_error("edgelist line " + std::to_string(lineno) + ": expected integers");
        bool has_id = static_cast<bool>(ls >> c);
        std::string rest;
        if (ls >> rest)
            throw input_error("edgelist line " + std::to_string(lineno) + ": trailing content");
        int id = -1, u = 0, v = 0;
        if (has_id) {
            id = static_cast<int>(a);
            u = static_cast<int>(b);
            v = static_cast<int>(c);
            any_id = true;
        } else {
            u = static_cast<int>(a);
            v = static_cast<int>(b);
            any_bare = true;
        }
        if (u < 0 || v < 0 || (has_id && id < 0))
            throw input_error("edgelist line " + std::to_string(lineno) + ": negative value");
        rows.push_back({id, {u, v}});
        max_vertex = std::max({max_vertex, u, v});
    }
    if (any_id && any_bare)
        throw input_error("edgelist: mixed 2-column and 3-column lines");
    if (any_id) {
        std::sort(rows.begin(), rows.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].first != static_cast<int>(i))
                throw input_error("edgelist: edge ids must be dense 0..m-1");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(rows.size());
    for (const auto& r : rows)
        edges.push_back(r.second);
    return Multigraph::from_edges(max_vertex + 1, edges);
}

std::string to_edgelist(const Multigraph& g) {
    std::ostringstream out;
    for (const auto& ed : g.edges())
        out << ed.u << " " << ed.v << "\n";
    return out.str();
}

} // namespace ttone
