#include "ttone/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <vector>

#include "ttone/errors.hpp"

namespace ttone {

namespace {

using Clock = std::chrono::steady_clock;

struct LabelUniverse {
    int k;
    int t;
    std::vector<std::uint64_t> masks;          // label index -> color bitmask (bit c-1 = color c)
    std::vector<std::vector<int>> colors;      // label index -> sorted colors

    LabelUniverse(int k_, int t_) : k(k_), t(t_) {
        std::vector<int> comb(static_cast<size_t>(t));
        for (int i = 0; i < t; ++i)
            comb[static_cast<size_t>(i)] = i + 1;
        for (;;) {
            std::uint64_t m = 0;
            for (int c : comb)
                m |= 1ULL << (c - 1);
            masks.push_back(m);
            colors.push_back(comb);
            // next combination in lexicographic order
            int i = t - 1;
            while (i >= 0 && comb[static_cast<size_t>(i)] == k - (t - 1 - i))
                --i;
            if (i < 0)
                break;
            ++comb[static_cast<size_t>(i)];
            for (int j = i + 1; j < t; ++j)
                comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
        }
    }

    int count() const { return static_cast<int>(masks.size()); }
};

struct Domain {
    std::vector<std::uint64_t> words;

    void fill(int nlabels) {
        words.assign(static_cast<size_t>((nlabels + 63) / 64), ~0ULL);
        int rem = nlabels % 64;
        if (rem)
            words.back() = (1ULL << rem) - 1;
    }
    bool has(int i) const { return (words[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1; }
    void clear_all_but(int i) {
        std::fill(words.begin(), words.end(), 0ULL);
        set(i);
    }
    void set(int i) { words[static_cast<size_t>(i >> 6)] |= 1ULL << (i & 63); }
    bool empty() const {
        for (auto w : words)
            if (w)
                return false;
        return true;
    }
};

struct Solver {
    const Multigraph& g;
    int t;
    int k;
    SolveOptions opts;
    LabelUniverse labels;
    int m;

    // constraint neighbors of each edge: (other edge, distance <= t)
    std::vector<std::vector<std::pair<int, int>>> neighbors;
    // incompatible[d-1][label]: bitset over labels sharing >= d colors with it
    std::vector<std::vector<Domain>> incompatible;

    std::vector<int> order;     // static branch order
    std::vector<int> order_pos; // edge -> position, -1 when preassigned
    std::vector<Domain> domains;
    std::vector<int> chosen; // edge -> label index or -1

    long long nodes = 0;
    bool limit_hit = false;
    Clock::time_point deadline;
    bool has_deadline = false;

    struct TrailEntry {
        int edge;
        std::uint32_t word;
        std::uint64_t old_value;
    };
    std::vector<TrailEntry> trail;

    Solver(const Multigraph& graph, int tone, int palette, const SolveOptions& options)
        : g(graph), t(tone), k(palette), opts(options), labels(palette, tone), m(graph.edge_count()) {
        neighbors.resize(static_cast<size_t>(m));
        for (int e = 0; e < m; ++e)
            for (auto [f, d] : edge_ball(g, e, t))
                if (f != e)
                    neighbors[static_cast<size_t>(e)].push_back({f, d});

        int nl = labels.count();
        incompatible.assign(static_cast<size_t>(t), {});
        for (int d = 1; d <= t; ++d) {
            auto& table = incompatible[static_cast<size_t>(d - 1)];
            table.resize(static_cast<size_t>(nl));
            for (int a = 0; a < nl; ++a) {
                table[static_cast<size_t>(a)].fill(nl);
                auto& dom = table[static_cast<size_t>(a)];
                std::fill(dom.words.begin(), dom.words.end(), 0ULL);
                for (int b = 0; b < nl; ++b)
                    if (std::popcount(labels.masks[static_cast<size_t>(a)] &
                                      labels.masks[static_cast<size_t>(b)]) >= d)
                        dom.set(b);
            }
        }

        order.resize(static_cast<size_t>(m));
        for (int e = 0; e < m; ++e)
            order[static_cast<size_t>(e)] = e;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            int da = g.edge_degree(a), db = g.edge_degree(b);
            if (da != db)
                return da > db; // most-constrained first
            return a < b;
        });
        order_pos.assign(static_cast<size_t>(m), 0);
        for (int i = 0; i < m; ++i)
            order_pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

        domains.resize(static_cast<size_t>(m));
        for (auto& dom : domains)
            dom.fill(nl);
        chosen.assign(static_cast<size_t>(m), -1);
    }

    bool out_of_budget() {
        if (limit_hit)
            return true;
        if (opts.node_limit && nodes > *opts.node_limit) {
            limit_hit = true;
            return true;
        }
        if (has_deadline && (nodes & 1023) == 0 && Clock::now() > deadline) {
            limit_hit = true;
            return true;
        }
        return false;
    }

    // Remove from e2's domain every label incompatible at distance d with label li.
    bool prune(int e2, int li, int d) {
        auto& dom = domains[static_cast<size_t>(e2)];
        const auto& bad = incompatible[static_cast<size_t>(d - 1)][static_cast<size_t>(li)];
        bool nonempty = false;
        for (size_t w = 0; w < dom.words.size(); ++w) {
            std::uint64_t nv = dom.words[w] & ~bad.words[w];
            if (nv != dom.words[w]) {
                trail.push_back({e2, static_cast<std::uint32_t>(w), dom.words[w]});
                dom.words[w] = nv;
            }
            nonempty |= (nv != 0);
        }
        return nonempty;
    }

    void rewind(size_t mark) {
        while (trail.size() > mark) {
            const auto& te = trail.back();
            domains[static_cast<size_t>(te.edge)].words[te.word] = te.old_value;
            trail.pop_back();
        }
    }

    bool assign_and_propagate(int e, int li) {
        chosen[static_cast<size_t>(e)] = li;
        for (auto [f, d] : neighbors[static_cast<size_t>(e)]) {
            if (chosen[static_cast<size_t>(f)] >= 0)
                continue;
            if (!prune(f, li, d))
                return false;
        }
        return true;
    }

    // New colors may only appear as (max color so far)+1, +2, ... consecutively.
    bool respects_introduction_rule(int li, int max_used) const {
        int expect = max_used + 1;
        for (int c : labels.colors[static_cast<size_t>(li)]) {
            if (c <= max_used)
                continue;
            if (c != expect)
                return false;
            ++expect;
        }
        return true;
    }

    bool search(int pos, int max_used) {
        if (pos == m)
            return true;
        int e = order[static_cast<size_t>(pos)];
        if (chosen[static_cast<size_t>(e)] >= 0)
            return search(pos + 1, max_used); // preassigned
        const auto& dom = domains[static_cast<size_t>(e)];
        int nl = labels.count();
        for (int li = 0; li < nl; ++li) {
            if (!dom.has(li))
                continue;
            if (opts.symmetry_breaking && !respects_introduction_rule(li, max_used))
                continue;
            ++nodes;
            if (out_of_budget())
                return false;
            size_t mark = trail.size();
            if (assign_and_propagate(e, li)) {
                int mu = std::max(max_used, labels.colors[static_cast<size_t>(li)].back());
                if (search(pos + 1, mu))
                    return true;
            }
            chosen[static_cast<size_t>(e)] = -1;
            rewind(mark);
            if (limit_hit)
                return false;
        }
        return false;
    }

    PartialColoring harvest() const {
        PartialColoring c;
        c.t = t;
        c.k = k;
        for (int e = 0; e < m; ++e)
            c.assignment.emplace(e, Label(labels.colors[static_cast<size_t>(chosen[static_cast<size_t>(e)])]));
        return c;
    }
};

void check_solver_input(const Multigraph& g, int t, int k) {
    if (t < 1)
        throw input_error("tone must be positive");
    if (t > k)
        throw input_error("tone exceeds palette size");
    if (k > 64)
        throw input_error("palette sizes beyond 64 are not supported by the solver");
    (void)g;
}

} // namespace

SolveResult is_k_colorable(const Multigraph& g, int t, int k, const SolveOptions& opts) {
    check_solver_input(g, t, k);
    if (g.edge_count() == 0) {
        PartialColoring empty;
        empty.t = t;
        empty.k = k;
        return {SolveStatus::Yes, std::move(empty), 0};
    }
    Solver s(g, t, k, opts);
    if (opts.time_limit_ms) {
        s.has_deadline = true;
        s.deadline = Clock::now() + std::chrono::milliseconds(*opts.time_limit_ms);
    }
    bool found = s.search(0, 0);
    if (found)
        return {SolveStatus::Yes, s.harvest(), s.nodes};
    if (s.limit_hit)
        return {SolveStatus::Unknown, std::nullopt, s.nodes};
    return {SolveStatus::No, std::nullopt, s.nodes};
}

IndexResult exact_index(const Multigraph& g, int t, const SolveOptions& opts) {
    IndexResult r;
    if (g.edge_count() == 0) {
        r.status = SolveStatus::Yes;
        r.value = 0;
        PartialColoring empty;
        empty.t = t;
        empty.k = 0;
        r.witness = std::move(empty);
        r.bracket_lo = 0;
        r.bracket_hi = 0;
        return r;
    }
    int k = std::max(t, t * g.max_degree());
    r.bracket_lo = k;
    int cap = opts.initial_upper ? *opts.initial_upper : (t * t + t) * std::max(2, 2 * g.max_degree() - 2);
    for (; k <= cap; ++k) {
        auto res = is_k_colorable(g, t, k, opts);
        r.nodes += res.nodes;
        if (res.status == SolveStatus::Yes) {
            r.status = SolveStatus::Yes;
            r.value = k;
            r.witness = std::move(res.witness);
            r.bracket_hi = k;
            return r;
        }
        if (res.status == SolveStatus::Unknown) {
            r.status = SolveStatus::Unknown;
            r.bracket_lo = k; // everything below k is refuted
            return r;
        }
        r.bracket_lo = k + 1;
    }
    r.status = SolveStatus::Unknown;
    return r;
}

ExtendResult extend_exact(const Multigraph& g, const PartialColoring& c, const SolveOptions& opts) {
    check_solver_input(g, c.t, c.k);
    auto viols = verify(g, c);
    if (!viols.empty())
        throw input_error("partial coloring is invalid: " + viols.front().str());
    if (static_cast<int>(c.assignment.size()) == g.edge_count())
        return {SolveStatus::Yes, c, 0};

    SolveOptions local = opts;
    // Renumbering-based symmetry breaking is unsound against a fixed
    // preassignment, so it only stays on for an empty one.
    if (!c.assignment.empty())
        local.symmetry_breaking = false;

    Solver s(g, c.t, c.k, local);
    if (opts.time_limit_ms) {
        s.has_deadline = true;
        s.deadline = Clock::now() + std::chrono::milliseconds(*opts.time_limit_ms);
    }
    // Seed the preassigned labels and propagate them.
    for (const auto& [e, lab] : c.assignment) {
        int li = -1;
        for (int i = 0; i < s.labels.count(); ++i)
            if (s.labels.colors[static_cast<size_t>(i)] == lab.colors()) {
                li = i;
                break;
            }
        if (li < 0)
            throw input_error("label " + lab.str() + " does not fit the palette");
        if (!s.domains[static_cast<size_t>(e)].has(li))
            return {SolveStatus::No, std::nullopt, 0};
        s.domains[static_cast<size_t>(e)].clear_all_but(li);
        if (!s.assign_and_propagate(e, li))
            return {SolveStatus::No, std::nullopt, 0};
    }
    bool found = s.search(0, 0);
    if (found)
        return {SolveStatus::Yes, s.harvest(), s.nodes};
    if (s.limit_hit)
        return {SolveStatus::Unknown, std::nullopt, s.nodes};
    return {SolveStatus::No, std::nullopt, s.nodes};
}

} // namespace ttone
