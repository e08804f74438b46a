#include "ttone/coloring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ttone/errors.hpp"

namespace ttone {

Label::Label(std::vector<int> colors) : colors_(std::move(colors)) {
    std::sort(colors_.begin(), colors_.end());
    for (size_t i = 0; i + 1 < colors_.size(); ++i)
        if (colors_[i] == colors_[i + 1])
            throw input_error("label colors must be distinct");
    for (int c : colors_)
        if (c < 1)
            throw input_error("colors are 1-based positive integers");
}

bool Label::contains(int c) const {
    return std::binary_search(colors_.begin(), colors_.end(), c);
}

int Label::intersection_size(const Label& other) const {
    int n = 0;
    auto it = colors_.begin();
    auto jt = other.colors_.begin();
    while (it != colors_.end() && jt != other.colors_.end()) {
        if (*it < *jt)
            ++it;
        else if (*jt < *it)
            ++jt;
        else {
            ++n;
            ++it;
            ++jt;
        }
    }
    return n;
}

std::string Label::str() const {
    std::string s = "{";
    for (size_t i = 0; i < colors_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(colors_[i]);
    }
    return s + "}";
}

const Label& PartialColoring::label(int e) const {
    auto it = assignment.find(e);
    if (it == assignment.end())
        throw input_error("edge " + std::to_string(e) + " is uncolored");
    return it->second;
}

std::vector<int> PartialColoring::colored_edges() const {
    std::vector<int> out;
    out.reserve(assignment.size());
    for (const auto& [e, lab] : assignment)
        out.push_back(e);
    return out;
}

std::string Violation::str() const {
    std::string s = "edges " + std::to_string(e) + " and " + std::to_string(e2) + " at distance " +
                    std::to_string(distance) + " share {";
    for (size_t i = 0; i < shared.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(shared[i]);
    }
    return s + "}";
}

namespace {

void check_labels(const Multigraph& g, const PartialColoring& c) {
    if (c.t > c.k)
        throw input_error("tone t exceeds palette size k");
    for (const auto& [e, lab] : c.assignment) {
        g.check_edge_id(e);
        if (lab.size() != c.t)
            throw input_error("label " + lab.str() + " on edge " + std::to_string(e) +
                              " has wrong size for t=" + std::to_string(c.t));
        if (lab.max_color() > c.k)
            throw input_error("label " + lab.str() + " on edge " + std::to_string(e) +
                              " leaves the palette 1.." + std::to_string(c.k));
    }
}

std::vector<int> shared_colors(const Label& a, const Label& b) {
    std::vector<int> out;
    std::set_intersection(a.colors().begin(), a.colors().end(), b.colors().begin(), b.colors().end(),
                          std::back_inserter(out));
    return out;
}

} // namespace

std::vector<Violation> verify(const Multigraph& g, const PartialColoring& c) {
    check_labels(g, c);
    std::vector<Violation> out;
    // Pairs beyond distance t cannot violate, so a radius-t ball suffices.
    for (const auto& [e, lab] : c.assignment) {
        for (auto [e2, d] : edge_ball(g, e, c.t)) {
            if (e2 <= e || !c.colored(e2))
                continue;
            auto sh = shared_colors(lab, c.label(e2));
            if (static_cast<int>(sh.size()) >= d)
                out.push_back({e, e2, d, std::move(sh)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.e, a.e2) < std::tie(b.e, b.e2);
    });
    return out;
}

std::vector<Violation> violations_if_assigned(const Multigraph& g, const PartialColoring& c, int e,
                                              const Label& lab) {
    std::vector<Violation> out;
    for (auto [e2, d] : edge_ball(g, e, c.t)) {
        if (e2 == e || !c.colored(e2))
            continue;
        auto sh = shared_colors(lab, c.label(e2));
        if (static_cast<int>(sh.size()) >= d)
            out.push_back({std::min(e, e2), std::max(e, e2), d, std::move(sh)});
    }
    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.e, a.e2) < std::tie(b.e, b.e2);
    });
    return out;
}

std::vector<int> free_colors(const Multigraph& g, const PartialColoring& c, int e) {
    g.check_edge_id(e);
    if (c.colored(e))
        throw input_error("free colors are defined for uncolored edges");
    std::set<int> used;
    for (int f : g.adjacent_edges(e))
        if (c.colored(f))
            for (int col : c.label(f).colors())
                used.insert(col);
    std::vector<int> out;
    for (int col = 1; col <= c.k; ++col)
        if (!used.count(col))
            out.push_back(col);
    return out;
}

std::vector<Label> max_intersecting_family(const std::vector<int>& free, int t) {
    if (t != 2)
        throw input_error("intersecting families are built for t = 2");
    std::vector<int> f(free);
    std::sort(f.begin(), f.end());
    if (f.size() < 3)
        throw input_error("need at least 3 free colors");
    std::vector<Label> out;
    if (f.size() == 3) {
        out.push_back(Label::of(f[0], f[1]));
        out.push_back(Label::of(f[0], f[2]));
        out.push_back(Label::of(f[1], f[2]));
    } else {
        for (size_t i = 1; i < f.size(); ++i)
            out.push_back(Label::of(f[0], f[i])); // pivot on the smallest free color
    }
    return out;
}

std::vector<Label> valid_labels(const Multigraph& g, const PartialColoring& c, int e,
                                const std::vector<Label>& family) {
    auto free = free_colors(g, c, e);
    std::set<int> free_set(free.begin(), free.end());
    for (const Label& lab : family)
        for (int col : lab.colors())
            if (!free_set.count(col))
                throw input_error("family label " + lab.str() + " uses a color not free at edge " +
                                  std::to_string(e));
    std::vector<Label> out;
    for (const Label& lab : family)
        if (violations_if_assigned(g, c, e, lab).empty())
            out.push_back(lab);
    return out;
}

PartialColoring extend(const Multigraph& g, const PartialColoring& c, int e, const Label& lab) {
    g.check_edge_id(e);
    if (c.colored(e))
        throw input_error("edge " + std::to_string(e) + " is already colored");
    if (lab.size() != c.t || lab.max_color() > c.k)
        throw input_error("label " + lab.str() + " does not fit t=" + std::to_string(c.t) +
                          ", k=" + std::to_string(c.k));
    auto viols = violations_if_assigned(g, c, e, lab);
    if (!viols.empty())
        throw input_error("label " + lab.str() + " is not valid for edge " + std::to_string(e) + ": " +
                          viols.front().str());
    PartialColoring out = c;
    out.assignment.emplace(e, lab);
    return out;
}

GreedyResult greedy_color(const Multigraph& g, int t, int k, const std::vector<int>& order) {
    if (t != 2)
        throw input_error("greedy coloring is built for t = 2");
    std::vector<int> sorted(order);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < g.edge_count(); ++i)
        if (i >= static_cast<int>(sorted.size()) || sorted[static_cast<size_t>(i)] != i)
            throw input_error("order must be a permutation of all edges");

    PartialColoring c;
    c.t = t;
    c.k = k;
    for (int e : order) {
        auto free = free_colors(g, c, e);
        std::vector<Label> family;
        if (free.size() >= 3) {
            family = max_intersecting_family(free);
        } else {
            // Degenerate palettes: fall back to the raw candidate labels.
            for (size_t i = 0; i < free.size(); ++i)
                for (size_t j = i + 1; j < free.size(); ++j)
                    family.push_back(Label::of(free[i], free[j]));
        }
        auto valids = valid_labels(g, c, e, family);
        if (valids.empty())
            return {std::nullopt, e};
        c.assignment.emplace(e, *std::min_element(valids.begin(), valids.end()));
    }
    return {std::move(c), -1};
}

std::string coloring_to_text(const PartialColoring& c) {
    std::ostringstream out;
    out << "t " << c.t << "\n";
    out << "k " << c.k << "\n";
    for (const auto& [e, lab] : c.assignment) {
        out << "e " << e;
        for (int col : lab.colors())
            out << " " << col;
        out << "\n";
    }
    return out.str();
}

PartialColoring coloring_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    PartialColoring c;
    bool have_t = false, have_k = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "t") {
            if (!(ls >> c.t) || c.t < 1)
                throw input_error("coloring line " + std::to_string(lineno) + ": bad t");
            have_t = true;
        } else if (tag == "k") {
            if (!(ls >> c.k) || c.k < 0)
                throw input_error("coloring line " + std::to_string(lineno) + ": bad k");
            have_k = true;
        } else if (tag == "e") {
            if (!have_t || !have_k)
                throw input_error("coloring line " + std::to_string(lineno) + ": e before t/k");
            int e = 0;
            if (!(ls >> e) || e < 0)
                throw input_error("coloring line " + std::to_string(lineno) + ": bad edge id");
            std::vector<int> cols;
            int col = 0;
            while (ls >> col)
                cols.push_back(col);
            if (static_cast<int>(cols.size()) != c.t)
                throw input_error("coloring line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(c.t) + " colors");
            if (c.assignment.count(e))
                throw input_error("coloring line " + std::to_string(lineno) + ": duplicate edge");
            c.assignment.emplace(e, Label(cols));
        } else if (tag == "trace" || tag == "strategy" || tag == "fallback") {
            continue; // trailing audit fields from colorer outcomes
        } else {
            throw input_error("coloring line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
        }
    }
    if (!have_t || !have_k)
        throw input_error("coloring document lacks t or k");
    return c;
}

} // namespace ttone
