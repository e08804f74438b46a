#include "ttone/colorers.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "colorers_internal.hpp"
#include "ttone/classify.hpp"
#include "ttone/errors.hpp"
#include "ttone/solver.hpp"

namespace ttone {

namespace detail {

InducedView induced_view(const Multigraph& g, const std::vector<bool>& alive) {
    InducedView v;
    v.sub_vertex.assign(static_cast<size_t>(g.vertex_count()), -1);
    for (int x = 0; x < g.vertex_count(); ++x)
        if (alive[static_cast<size_t>(x)]) {
            v.sub_vertex[static_cast<size_t>(x)] = static_cast<int>(v.orig_vertex.size());
            v.orig_vertex.push_back(x);
        }
    v.sub_edge.assign(static_cast<size_t>(g.edge_count()), -1);
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (alive[static_cast<size_t>(ed.u)] && alive[static_cast<size_t>(ed.v)]) {
            v.sub_edge[static_cast<size_t>(e)] = static_cast<int>(edges.size());
            v.orig_edge.push_back(e);
            edges.push_back({v.sub_vertex[static_cast<size_t>(ed.u)], v.sub_vertex[static_cast<size_t>(ed.v)]});
        }
    }
    v.sub = Multigraph::from_edges(static_cast<int>(v.orig_vertex.size()), edges);
    return v;
}

std::vector<int> StepCtx::identity_perm() const {
    std::vector<int> img(static_cast<size_t>(c.k));
    std::iota(img.begin(), img.end(), 1);
    return img;
}

void StepCtx::permute(const std::vector<int>& img) {
    for (auto& [e, lab] : c.assignment)
        lab = apply_perm(img, lab);
    TraceStep st;
    st.kind = TraceStep::Kind::Permute;
    st.perm = img;
    actions.push_back(std::move(st));
}

void StepCtx::assign(int e, const Label& lab) {
    auto viols = violations_if_assigned(g, c, e, lab);
    if (!viols.empty())
        throw defect_error("guaranteed extension failed on edge " + std::to_string(e) + ": " +
                           viols.front().str());
    if (c.colored(e))
        throw defect_error("edge " + std::to_string(e) + " assigned twice");
    c.assignment.emplace(e, lab);
    TraceStep st;
    st.kind = TraceStep::Kind::Assign;
    st.edge = e;
    st.label = lab;
    actions.push_back(std::move(st));
}

void StepCtx::recolor(int e, const Label& lab) {
    if (!c.colored(e))
        throw defect_error("recolor of uncolored edge " + std::to_string(e));
    PartialColoring without = c;
    without.assignment.erase(e);
    auto viols = violations_if_assigned(g, without, e, lab);
    if (!viols.empty())
        throw defect_error("guaranteed recolor failed on edge " + std::to_string(e) + ": " +
                           viols.front().str());
    c.assignment[e] = lab;
    TraceStep st;
    st.kind = TraceStep::Kind::Recolor;
    st.edge = e;
    st.label = lab;
    actions.push_back(std::move(st));
}

void StepCtx::uncolor(int e) {
    c.assignment.erase(e);
    TraceStep st;
    st.kind = TraceStep::Kind::Uncolor;
    st.edge = e;
    actions.push_back(std::move(st));
}

std::vector<int> perm_from_pairs(int k, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> img(static_cast<size_t>(k), 0);
    std::vector<bool> target_used(static_cast<size_t>(k + 1), false);
    for (auto [src, tgt] : pairs) {
        img[static_cast<size_t>(src - 1)] = tgt;
        target_used[static_cast<size_t>(tgt)] = true;
    }
    int next = 1;
    for (int c = 1; c <= k; ++c) {
        if (img[static_cast<size_t>(c - 1)] != 0)
            continue;
        while (target_used[static_cast<size_t>(next)])
            ++next;
        img[static_cast<size_t>(c - 1)] = next;
        target_used[static_cast<size_t>(next)] = true;
    }
    return img;
}

std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<int> out(inner.size());
    for (size_t i = 0; i < inner.size(); ++i)
        out[i] = outer[static_cast<size_t>(inner[i] - 1)];
    return out;
}

std::vector<int> invert(const std::vector<int>& perm) {
    std::vector<int> out(perm.size());
    for (size_t i = 0; i < perm.size(); ++i)
        out[static_cast<size_t>(perm[i] - 1)] = static_cast<int>(i) + 1;
    return out;
}

Label apply_perm(const std::vector<int>& perm, const Label& lab) {
    std::vector<int> cols;
    cols.reserve(static_cast<size_t>(lab.size()));
    for (int c : lab.colors())
        cols.push_back(perm[static_cast<size_t>(c - 1)]);
    return Label(cols);
}

void step_family_extend(StepCtx& ctx, int e, const char* what) {
    auto free = free_colors(ctx.g, ctx.c, e);
    if (free.size() < 3)
        throw defect_error(std::string(what) + ": fewer than 3 free colors at edge " + std::to_string(e));
    auto family = max_intersecting_family(free);
    auto valids = valid_labels(ctx.g, ctx.c, e, family);
    if (valids.empty())
        throw defect_error(std::string(what) + ": no valid label in the family at edge " + std::to_string(e));
    ctx.assign(e, *std::min_element(valids.begin(), valids.end()));
}

void step_any_candidate(StepCtx& ctx, int e, const char* what) {
    auto free = free_colors(ctx.g, ctx.c, e);
    for (size_t i = 0; i < free.size(); ++i)
        for (size_t j = i + 1; j < free.size(); ++j) {
            Label lab = Label::of(free[i], free[j]);
            if (violations_if_assigned(ctx.g, ctx.c, e, lab).empty()) {
                ctx.assign(e, lab);
                return;
            }
        }
    throw defect_error(std::string(what) + ": no candidate label valid at edge " + std::to_string(e));
}

void step_pendant(StepCtx& ctx, int e) {
    step_family_extend(ctx, e, "pendant extension");
}

void step_degree_two(StepCtx& ctx, int u) {
    const Multigraph& g = ctx.g;
    auto inc = g.incident(u);
    if (inc.size() != 2)
        throw input_error("vertex " + std::to_string(u) + " does not have degree two");
    int e1 = inc[0], e2 = inc[1];
    // e1 goes to the smaller-indexed neighbor.
    auto other = [&](int e) {
        const auto& ed = g.edge(e);
        return ed.u == u ? ed.v : ed.u;
    };
    if (other(e2) < other(e1))
        std::swap(e1, e2);
    if (ctx.c.colored(e1) || ctx.c.colored(e2))
        throw input_error("both edges at the degree-2 vertex must be uncolored");

    auto free1 = free_colors(g, ctx.c, e1);
    if (free1.size() < 6)
        throw defect_error("degree-two extension: fewer than 6 free colors");
    // Pivot the smallest of the six smallest free colors against the rest.
    std::vector<Label> fam;
    for (int i = 1; i <= 5; ++i)
        fam.push_back(Label::of(free1[0], free1[static_cast<size_t>(i)]));
    auto valids = valid_labels(g, ctx.c, e1, fam);
    if (valids.size() < 2)
        throw defect_error("degree-two extension: fewer than 2 valid labels on the first edge");
    Label first = valids[0], second = valids[1];

    // Colors already present on the colored edges at the far end of e2.
    std::set<int> far_colors;
    for (int f : g.adjacent_edges(e2))
        if (f != e1 && ctx.c.colored(f)) {
            const auto& ed = g.edge(f);
            if (ed.u == u || ed.v == u)
                continue; // e1 handled separately
            for (int col : ctx.c.label(f).colors())
                far_colors.insert(col);
        }
    auto hits = [&](const Label& lab) {
        for (int col : lab.colors())
            if (far_colors.count(col))
                return true;
        return false;
    };

    if (hits(first) || hits(second)) {
        // Sharing a color with the far side keeps enough colors free there.
        ctx.assign(e1, hits(first) ? first : second);
        step_any_candidate(ctx, e2, "degree-two extension");
        return;
    }
    // Disjoint case: assign the first label; the second's partner stays free
    // on the other edge and pivots a fresh family there.
    ctx.assign(e1, first);
    int pivot = second.colors()[1] == free1[0] ? second.colors()[0] : second.colors()[1];
    auto free2 = free_colors(g, ctx.c, e2);
    std::vector<int> others;
    for (int col : free2)
        if (col != pivot)
            others.push_back(col);
    bool pivot_free = std::find(free2.begin(), free2.end(), pivot) != free2.end();
    if (!pivot_free || others.size() < 3)
        throw defect_error("degree-two extension: pivot family unavailable on the second edge");
    std::vector<Label> fam2;
    for (int i = 0; i < 3; ++i)
        fam2.push_back(Label::of(pivot, others[static_cast<size_t>(i)]));
    auto valids2 = valid_labels(g, ctx.c, e2, fam2);
    if (valids2.empty())
        throw defect_error("degree-two extension: pivot family exhausted on the second edge");
    ctx.assign(e2, *std::min_element(valids2.begin(), valids2.end()));
}

void step_diamond(StepCtx& ctx, int u) {
    const Multigraph& g = ctx.g;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3)
            throw input_error("diamond extension requires a cubic graph");
    auto nbs = g.neighbors(u);
    if (nbs.size() != 3)
        throw input_error("diamond apex must have three distinct neighbors");
    // u2 is the neighbor adjacent to both others; the outer pair must not be
    // adjacent (that would be K4, where no outside neighbors exist).
    int u1 = -1, u2 = -1, u3 = -1;
    for (int i = 0; i < 3; ++i) {
        int mid = nbs[static_cast<size_t>(i)];
        int a = nbs[static_cast<size_t>((i + 1) % 3)];
        int b = nbs[static_cast<size_t>((i + 2) % 3)];
        if (g.adjacent(mid, a) && g.adjacent(mid, b)) {
            u2 = mid;
            u1 = std::min(a, b);
            u3 = std::max(a, b);
            break;
        }
    }
    if (u2 < 0 || g.adjacent(u1, u3))
        throw input_error("vertex does not sit on a diamond configuration");

    auto edge_between = [&](int a, int b) {
        for (int e : g.incident(a)) {
            const auto& ed = g.edge(e);
            if (ed.u + ed.v == a + b && (ed.u == a || ed.v == a))
                return e;
        }
        throw input_error("missing diamond edge");
    };
    int uu1 = edge_between(u, u1), uu2 = edge_between(u, u2), uu3 = edge_between(u, u3);
    int u1u2 = edge_between(u1, u2), u2u3 = edge_between(u2, u3);
    if (ctx.c.colored(uu1) || ctx.c.colored(uu2) || ctx.c.colored(uu3))
        throw input_error("the three apex edges must be uncolored");
    if (!ctx.c.colored(u1u2) || !ctx.c.colored(u2u3))
        throw input_error("the diamond path edges must be colored");

    // Normal form: f(u1u2) = {1,2}, f(u2u3) = {3,4}.
    {
        const auto& l12 = ctx.c.label(u1u2).colors();
        const auto& l34 = ctx.c.label(u2u3).colors();
        ctx.permute(perm_from_pairs(ctx.c.k, {{l12[0], 1}, {l12[1], 2}, {l34[0], 3}, {l34[1], 4}}));
    }

    // First apex edge: one of 3,4 is free there; pivot on it.
    auto free1 = free_colors(g, ctx.c, uu1);
    auto has = [](const std::vector<int>& v, int x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    if (!has(free1, 3)) {
        if (!has(free1, 4))
            throw defect_error("diamond extension: neither 3 nor 4 free at the first apex edge");
        ctx.permute(perm_from_pairs(ctx.c.k, {{3, 4}, {4, 3}}));
        free1 = free_colors(g, ctx.c, uu1);
    }
    std::vector<Label> fam1;
    for (int col : free1)
        if (col != 3)
            fam1.push_back(Label::of(3, col));
    if (fam1.size() < 4)
        throw defect_error("diamond extension: pivot family too small at the first apex edge");
    auto val1 = valid_labels(g, ctx.c, uu1, fam1);
    if (val1.empty())
        throw defect_error("diamond extension: first apex edge stuck");
    ctx.assign(uu1, *std::min_element(val1.begin(), val1.end()));

    // Second apex edge: one of 1,2 is free there; pivot on it.
    auto free3 = free_colors(g, ctx.c, uu3);
    if (!has(free3, 1)) {
        if (!has(free3, 2))
            throw defect_error("diamond extension: neither 1 nor 2 free at the second apex edge");
        ctx.permute(perm_from_pairs(ctx.c.k, {{1, 2}, {2, 1}}));
        free3 = free_colors(g, ctx.c, uu3);
    }
    std::vector<Label> fam3;
    for (int col : free3)
        if (col != 1)
            fam3.push_back(Label::of(1, col));
    if (fam3.size() < 3)
        throw defect_error("diamond extension: pivot family too small at the second apex edge");
    auto val3 = valid_labels(g, ctx.c, uu3, fam3);
    if (val3.empty())
        throw defect_error("diamond extension: second apex edge stuck");
    ctx.assign(uu3, *std::min_element(val3.begin(), val3.end()));

    // Middle apex edge.
    step_family_extend(ctx, uu2, "diamond extension");
}

PartialColoring view_coloring(const InducedView& view, const PartialColoring& master) {
    PartialColoring wc;
    wc.t = master.t;
    wc.k = master.k;
    for (const auto& [e, lab] : master.assignment) {
        int se = view.sub_edge[static_cast<size_t>(e)];
        if (se >= 0)
            wc.assignment.emplace(se, lab);
    }
    return wc;
}

void fold_step(const InducedView& view, const StepCtx& ctx, PartialColoring& master,
               std::vector<TraceStep>& trace) {
    for (const auto& st : ctx.actions) {
        TraceStep tr = st;
        switch (tr.kind) {
        case TraceStep::Kind::Permute:
            for (auto& [e, lab] : master.assignment)
                lab = apply_perm(tr.perm, lab);
            break;
        case TraceStep::Kind::Assign:
        case TraceStep::Kind::Recolor:
            tr.edge = view.orig_edge[static_cast<size_t>(tr.edge)];
            master.assignment[tr.edge] = tr.label;
            break;
        case TraceStep::Kind::Uncolor:
            tr.edge = view.orig_edge[static_cast<size_t>(tr.edge)];
            master.assignment.erase(tr.edge);
            break;
        }
        trace.push_back(std::move(tr));
    }
}

ColorerOutcome finish_outcome(const Multigraph& g, PartialColoring coloring,
                              std::vector<TraceStep> trace, bool fallback_used, std::string strategy) {
    auto viols = verify(g, coloring);
    if (!viols.empty())
        throw defect_error("colorer produced an invalid coloring: " + viols.front().str());
    ColorerOutcome out;
    out.coloring = std::move(coloring);
    out.trace = std::move(trace);
    out.fallback_used = fallback_used;
    out.strategy = std::move(strategy);
    return out;
}

} // namespace detail

using namespace detail;

PartialColoring replay_trace(const std::vector<TraceStep>& trace, int t, int k) {
    PartialColoring c;
    c.t = t;
    c.k = k;
    for (const auto& st : trace) {
        switch (st.kind) {
        case TraceStep::Kind::Assign:
            c.assignment[st.edge] = st.label;
            break;
        case TraceStep::Kind::Recolor:
            c.assignment[st.edge] = st.label;
            break;
        case TraceStep::Kind::Uncolor:
            c.assignment.erase(st.edge);
            break;
        case TraceStep::Kind::Permute:
            for (auto& [e, lab] : c.assignment)
                lab = apply_perm(st.perm, lab);
            break;
        }
    }
    return c;
}

std::string outcome_to_text(const ColorerOutcome& out) {
    std::ostringstream os;
    os << coloring_to_text(out.coloring);
    os << "strategy " << out.strategy << "\n";
    os << "fallback " << (out.fallback_used ? "1" : "0") << "\n";
    for (const auto& st : out.trace) {
        switch (st.kind) {
        case TraceStep::Kind::Assign:
            os << "trace assign " << st.edge;
            for (int c : st.label.colors())
                os << " " << c;
            os << "\n";
            break;
        case TraceStep::Kind::Recolor:
            os << "trace recolor " << st.edge;
            for (int c : st.label.colors())
                os << " " << c;
            os << "\n";
            break;
        case TraceStep::Kind::Uncolor:
            os << "trace uncolor " << st.edge << "\n";
            break;
        case TraceStep::Kind::Permute:
            os << "trace permute";
            for (int c : st.perm)
                os << " " << c;
            os << "\n";
            break;
        }
    }
    return os.str();
}

// ---- standalone extension wrappers -----------------------------------------
// The step logic renames colors globally; standalone calls undo the renaming
// so the input coloring is extended pointwise.

namespace {

PartialColoring run_standalone(const Multigraph& g, const PartialColoring& c,
                               const std::function<void(StepCtx&)>& body) {
    StepCtx ctx(g, c);
    body(ctx);
    std::vector<int> total = ctx.identity_perm();
    for (const auto& st : ctx.actions)
        if (st.kind == TraceStep::Kind::Permute)
            total = compose(st.perm, total);
    auto inv = invert(total);
    PartialColoring out = ctx.c;
    for (auto& [e, lab] : out.assignment)
        lab = apply_perm(inv, lab);
    return out;
}

void require_subcubic(const Multigraph& g, int min_k, int k, const char* what) {
    if (g.max_degree() > 3)
        throw input_error(std::string(what) + " requires a subcubic graph");
    if (k < min_k)
        throw input_error(std::string(what) + " requires k >= " + std::to_string(min_k));
}

} // namespace

PartialColoring extend_pendant_edge(const Multigraph& g, const PartialColoring& c, int e) {
    require_subcubic(g, 7, c.k, "pendant extension");
    g.check_edge_id(e);
    if (c.colored(e))
        throw input_error("edge is already colored");
    const auto& ed = g.edge(e);
    if (g.degree(ed.u) != 1 && g.degree(ed.v) != 1)
        throw input_error("neither end of the edge has degree one");
    return run_standalone(g, c, [&](StepCtx& ctx) { step_pendant(ctx, e); });
}

PartialColoring extend_degree_two(const Multigraph& g, const PartialColoring& c, int u) {
    require_subcubic(g, 10, c.k, "degree-two extension");
    g.check_vertex_id(u);
    return run_standalone(g, c, [&](StepCtx& ctx) { step_degree_two(ctx, u); });
}

PartialColoring extend_diamond(const Multigraph& g, const PartialColoring& c, int u) {
    require_subcubic(g, 9, c.k, "diamond extension");
    g.check_vertex_id(u);
    return run_standalone(g, c, [&](StepCtx& ctx) { step_diamond(ctx, u); });
}

// ---- cycle patterns -------------------------------------------------------

namespace {

std::vector<Label> labels_of(std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Label> out;
    for (auto [a, b] : pairs)
        out.push_back(Label::of(a, b));
    return out;
}

} // namespace

std::vector<Label> cycle_pattern_labels(int n) {
    if (n < 3)
        throw input_error("cycles need length >= 3");
    if (n == 3)
        return labels_of({{1, 2}, {3, 4}, {5, 6}});
    if (n == 4)
        return labels_of({{1, 2}, {3, 4}, {1, 5}, {3, 6}});
    if (n == 7)
        return labels_of({{1, 2}, {3, 4}, {1, 5}, {2, 6}, {4, 5}, {1, 3}, {4, 6}});
    // Blocks share the boundary (12, 34, ..., 23, 45), so any concatenation
    // remains valid cyclically.
    static const std::vector<Label> a5 = labels_of({{1, 2}, {3, 4}, {1, 5}, {2, 3}, {4, 5}});
    static const std::vector<Label> b6 = labels_of({{1, 2}, {3, 4}, {2, 5}, {1, 4}, {2, 3}, {4, 5}});
    static const std::vector<Label> b8 =
        labels_of({{1, 2}, {3, 4}, {1, 5}, {2, 4}, {3, 5}, {1, 4}, {2, 3}, {4, 5}});
    static const std::vector<Label> b9 =
        labels_of({{1, 2}, {3, 4}, {1, 5}, {2, 4}, {1, 3}, {2, 5}, {1, 4}, {2, 3}, {4, 5}});

    std::vector<Label> out;
    auto append = [&](const std::vector<Label>& block) { out.insert(out.end(), block.begin(), block.end()); };
    int rest = n;
    switch (n % 5) {
    case 1:
        append(b6);
        rest -= 6;
        break;
    case 2:
        append(b6);
        append(b6);
        rest -= 12;
        break;
    case 3:
        append(b8);
        rest -= 8;
        break;
    case 4:
        append(b9);
        rest -= 9;
        break;
    default:
        break;
    }
    if (rest < 0)
        throw input_error("no 5-color pattern for this cycle length");
    for (; rest > 0; rest -= 5)
        append(a5);
    return out;
}

// ---- tree colorer ----------------------------------------------------------

ColorerOutcome color_tree(const Multigraph& g) {
    ClassReport cls = classify(g);
    if (!cls.is_tree || !g.is_simple())
        throw hypothesis_error("tree colorer requires a simple tree");
    if (cls.max_degree < 3)
        throw hypothesis_error("tree colorer requires max degree >= 3; paths go to the exact solver");
    int delta = cls.max_degree;
    int k = 2 * delta;
    int n = g.vertex_count();

    int root = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == delta) {
            root = v;
            break;
        }
    // Depths never change while peeling leaves, so compute them once.
    std::vector<int> depth(static_cast<size_t>(n), -1);
    std::deque<int> q{root};
    depth[static_cast<size_t>(root)] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v))
            if (depth[static_cast<size_t>(w)] < 0) {
                depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
                q.push_back(w);
            }
    }

    std::vector<bool> alive(static_cast<size_t>(n), true);
    std::vector<int> deg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        deg[static_cast<size_t>(v)] = g.degree(v);

    struct Peel {
        int leaf;
        int parent;
    };
    std::vector<Peel> peels;
    for (;;) {
        // Deepest alive internal vertex other than the root.
        int v = -1;
        for (int x = 0; x < n; ++x) {
            if (!alive[static_cast<size_t>(x)] || x == root || deg[static_cast<size_t>(x)] <= 1)
                continue;
            if (v < 0 || depth[static_cast<size_t>(x)] > depth[static_cast<size_t>(v)])
                v = x;
        }
        if (v < 0)
            break; // a star around the root remains
        int leaf = -1;
        for (int w : g.neighbors(v))
            if (alive[static_cast<size_t>(w)] && depth[static_cast<size_t>(w)] == depth[static_cast<size_t>(v)] + 1 &&
                deg[static_cast<size_t>(w)] == 1) {
                leaf = w;
                break;
            }
        if (leaf < 0)
            throw defect_error("deepest internal vertex has no leaf child");
        peels.push_back({leaf, v});
        alive[static_cast<size_t>(leaf)] = false;
        --deg[static_cast<size_t>(v)];
        --deg[static_cast<size_t>(leaf)];
    }

    // Base star: disjoint labels on the root's remaining edges.
    PartialColoring master;
    master.t = 2;
    master.k = k;
    std::vector<TraceStep> trace;
    {
        int next = 1;
        for (int e : g.incident(root)) {
            const auto& ed = g.edge(e);
            int w = (ed.u == root) ? ed.v : ed.u;
            if (!alive[static_cast<size_t>(w)])
                throw defect_error("peeling removed a root neighbor");
            Label lab = Label::of(next, next + 1);
            next += 2;
            master.assignment.emplace(e, lab);
            TraceStep st;
            st.kind = TraceStep::Kind::Assign;
            st.edge = e;
            st.label = lab;
            trace.push_back(std::move(st));
        }
    }

    // Rebuild in reverse: direct extension, else the sibling swap.
    for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
        alive[static_cast<size_t>(it->leaf)] = true;
        auto view = induced_view(g, alive);
        StepCtx ctx(view.sub, view_coloring(view, master));

        int v = view.sub_vertex[static_cast<size_t>(it->parent)];
        int v1 = view.sub_vertex[static_cast<size_t>(it->leaf)];
        int e_new = -1;
        for (int e : view.sub.incident(v1))
            e_new = e; // the leaf has exactly one edge
        if (view.sub.degree(v) == 2) {
            // Only the parent edge constrains; any of the many candidates fits.
            step_any_candidate(ctx, e_new, "tree extension");
        } else {
            auto free = free_colors(view.sub, ctx.c, e_new);
            if (free.size() < 2)
                throw defect_error("tree extension: fewer than 2 free colors");
            Label ab = Label::of(free[0], free[1]);
            if (violations_if_assigned(view.sub, ctx.c, e_new, ab).empty()) {
                ctx.assign(e_new, ab);
            } else {
                // The blocking label sits at the parent; swap through a second
                // leaf child of v.
                int v2e = -1;
                for (int e : view.sub.incident(v)) {
                    if (e == e_new || !ctx.c.colored(e))
                        continue;
                    const auto& ed = view.sub.edge(e);
                    int w = (ed.u == v) ? ed.v : ed.u;
                    if (view.sub.degree(w) == 1) {
                        v2e = e;
                        break;
                    }
                }
                if (v2e < 0)
                    throw defect_error("tree extension: no colored leaf sibling for the swap");
                auto cd = ctx.c.label(v2e).colors();
                ctx.recolor(v2e, Label::of(cd[0], free[0]));
                ctx.assign(e_new, Label::of(cd[1], free[1]));
            }
        }

        fold_step(view, ctx, master, trace);
    }

    return finish_outcome(g, std::move(master), std::move(trace), false, "tree_exact");
}

// ---- general colorer -------------------------------------------------------

ColorerOutcome color_general(const Multigraph& g) {
    if (!g.is_simple())
        throw hypothesis_error("general colorer requires a simple graph");
    int delta = g.max_degree();
    if (delta < 2)
        throw hypothesis_error("general colorer requires max degree >= 2");
    int k = 6 * delta - 4;
    std::vector<int> order(static_cast<size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    auto res = greedy_color(g, 2, k, order);
    if (!res.coloring)
        throw defect_error("greedy coloring stuck at edge " + std::to_string(res.failed_edge) +
                           " despite the guarantee");
    std::vector<TraceStep> trace;
    for (const auto& [e, lab] : res.coloring->assignment) {
        TraceStep st;
        st.kind = TraceStep::Kind::Assign;
        st.edge = e;
        st.label = lab;
        trace.push_back(std::move(st));
    }
    return finish_outcome(g, std::move(*res.coloring), std::move(trace), false, "t1_6d4");
}

// ---- planar colorer --------------------------------------------------------

ColorerOutcome color_planar(const Multigraph& g) {
    if (!g.is_simple())
        throw hypothesis_error("planar colorer requires a simple graph");
    int delta = g.max_degree();
    int k = std::max(41, 3 * delta + 5);
    int n = g.vertex_count();

    std::vector<bool> alive(static_cast<size_t>(n), true);
    std::vector<int> deg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        deg[static_cast<size_t>(v)] = g.degree(v);

    struct Peel {
        int u;
        std::vector<int> edge_order; // original edge ids, high-degree ends first
    };
    std::vector<Peel> peels;
    int remaining = n;
    while (remaining > 0) {
        int u = -1;
        for (int x = 0; x < n && u < 0; ++x) {
            if (!alive[static_cast<size_t>(x)] || deg[static_cast<size_t>(x)] > 5)
                continue;
            int heavy = 0;
            for (int e : g.incident(x)) {
                const auto& ed = g.edge(e);
                int w = (ed.u == x) ? ed.v : ed.u;
                if (alive[static_cast<size_t>(w)] && deg[static_cast<size_t>(w)] >= 11)
                    ++heavy;
            }
            if (heavy <= 2)
                u = x;
        }
        if (u < 0)
            throw hypothesis_error("no vertex satisfies the planar peeling hypothesis; is the graph planar?");
        Peel p;
        p.u = u;
        std::vector<std::pair<int, int>> heavy_edges, light_edges; // (neighbor, edge)
        for (int e : g.incident(u)) {
            const auto& ed = g.edge(e);
            int w = (ed.u == u) ? ed.v : ed.u;
            if (!alive[static_cast<size_t>(w)])
                continue;
            if (deg[static_cast<size_t>(w)] >= 11)
                heavy_edges.push_back({w, e});
            else
                light_edges.push_back({w, e});
        }
        std::sort(heavy_edges.begin(), heavy_edges.end());
        std::sort(light_edges.begin(), light_edges.end());
        for (auto [w, e] : heavy_edges)
            p.edge_order.push_back(e);
        for (auto [w, e] : light_edges)
            p.edge_order.push_back(e);
        for (int e : p.edge_order) {
            const auto& ed = g.edge(e);
            int w = (ed.u == u) ? ed.v : ed.u;
            --deg[static_cast<size_t>(w)];
        }
        deg[static_cast<size_t>(u)] = 0;
        alive[static_cast<size_t>(u)] = false;
        --remaining;
        peels.push_back(std::move(p));
    }

    PartialColoring master;
    master.t = 2;
    master.k = k;
    std::vector<TraceStep> trace;
    for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
        alive[static_cast<size_t>(it->u)] = true;
        if (it->edge_order.empty())
            continue;
        auto view = induced_view(g, alive);
        StepCtx ctx(view.sub, view_coloring(view, master));
        for (int e : it->edge_order) {
            int se = view.sub_edge[static_cast<size_t>(e)];
            auto free = free_colors(view.sub, ctx.c, se);
            if (free.size() < 3)
                throw hypothesis_error("planar extension ran out of free colors; is the graph planar?");
            auto family = max_intersecting_family(free);
            auto valids = valid_labels(view.sub, ctx.c, se, family);
            if (valids.empty())
                throw hypothesis_error("planar extension found no valid label; is the graph planar?");
            ctx.assign(se, *std::min_element(valids.begin(), valids.end()));
        }
        fold_step(view, ctx, master, trace);
    }
    return finish_outcome(g, std::move(master), std::move(trace), false, "planar");
}

// ---- outerplanar colorer ----------------------------------------------------

ColorerOutcome color_outerplanar(const Multigraph& g) {
    if (!g.is_simple())
        throw hypothesis_error("outerplanar colorer requires a simple graph");
    int delta = g.max_degree();
    int k = std::max(14, 3 * delta);
    int n = g.vertex_count();

    std::vector<bool> alive(static_cast<size_t>(n), true);
    std::vector<int> deg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        deg[static_cast<size_t>(v)] = g.degree(v);
    auto alive_edge = [&](int e) {
        const auto& ed = g.edge(e);
        return alive[static_cast<size_t>(ed.u)] && alive[static_cast<size_t>(ed.v)];
    };

    struct Peel {
        int u;
        std::vector<int> edge_order; // uw before uv in the degree-2 case
    };
    std::vector<Peel> peels;
    int edges_left = g.edge_count();
    while (edges_left > 0) {
        int u = -1;
        std::vector<int> order;
        // Pendant edge first.
        for (int e = 0; e < g.edge_count() && u < 0; ++e) {
            if (!alive_edge(e))
                continue;
            const auto& ed = g.edge(e);
            if (deg[static_cast<size_t>(ed.u)] == 1)
                u = ed.u;
            else if (deg[static_cast<size_t>(ed.v)] == 1)
                u = ed.v;
            if (u >= 0)
                order = {e};
        }
        if (u < 0) {
            // Degree-2 vertex with a neighbor of degree <= 4.
            for (int e = 0; e < g.edge_count() && u < 0; ++e) {
                if (!alive_edge(e))
                    continue;
                const auto& ed = g.edge(e);
                int x = -1;
                if (deg[static_cast<size_t>(ed.u)] == 2 && deg[static_cast<size_t>(ed.v)] <= 4)
                    x = ed.u;
                else if (deg[static_cast<size_t>(ed.v)] == 2 && deg[static_cast<size_t>(ed.u)] <= 4)
                    x = ed.v;
                if (x < 0)
                    continue;
                u = x;
                int uv = e;
                int uw = -1;
                for (int f : g.incident(u))
                    if (f != uv && alive_edge(f))
                        uw = f;
                if (uw < 0)
                    throw defect_error("degree-2 vertex lost its second edge");
                order = {uw, uv};
            }
        }
        if (u < 0)
            throw hypothesis_error("no edge satisfies the outerplanar peeling hypothesis; is the graph outerplanar?");
        for (int e : order) {
            const auto& ed = g.edge(e);
            int w = (ed.u == u) ? ed.v : ed.u;
            --deg[static_cast<size_t>(w)];
            --edges_left;
        }
        deg[static_cast<size_t>(u)] = 0;
        alive[static_cast<size_t>(u)] = false;
        peels.push_back({u, std::move(order)});
    }

    PartialColoring master;
    master.t = 2;
    master.k = k;
    std::vector<TraceStep> trace;
    for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
        alive[static_cast<size_t>(it->u)] = true;
        auto view = induced_view(g, alive);
        StepCtx ctx(view.sub, view_coloring(view, master));
        for (int e : it->edge_order) {
            int se = view.sub_edge[static_cast<size_t>(e)];
            auto free = free_colors(view.sub, ctx.c, se);
            if (free.size() < 3)
                throw hypothesis_error("outerplanar extension ran out of free colors");
            auto family = max_intersecting_family(free);
            auto valids = valid_labels(view.sub, ctx.c, se, family);
            if (valids.empty())
                throw hypothesis_error("outerplanar extension found no valid label");
            ctx.assign(se, *std::min_element(valids.begin(), valids.end()));
        }
        fold_step(view, ctx, master, trace);
    }
    return finish_outcome(g, std::move(master), std::move(trace), false, "outerplanar");
}

// ---- dispatch ---------------------------------------------------------------

ColorerOutcome auto_color(const Multigraph& g, bool assume_planar) {
    if (g.edge_count() == 0) {
        ColorerOutcome out;
        out.coloring.t = 2;
        out.coloring.k = 0;
        out.strategy = "empty";
        return out;
    }
    ClassReport cls = classify(g);
    int delta = cls.max_degree;

    auto exact_route = [&]() {
        auto res = exact_index(g, 2);
        if (res.status != SolveStatus::Yes)
            throw defect_error("exact solver failed inside the dispatcher");
        std::vector<TraceStep> trace;
        for (const auto& [e, lab] : res.witness->assignment) {
            TraceStep st;
            st.kind = TraceStep::Kind::Assign;
            st.edge = e;
            st.label = lab;
            trace.push_back(std::move(st));
        }
        return finish_outcome(g, std::move(*res.witness), std::move(trace), false, "exact");
    };

    // Disjoint paths and cycles: the exact solver settles 5 vs 6 directly.
    if (delta <= 2)
        return exact_route();

    // Multigraphs: only the series-parallel colorer applies; otherwise solve.
    if (!g.is_simple()) {
        if (cls.is_series_parallel_subcubic)
            return color_sp_subcubic(g);
        return exact_route();
    }

    struct Candidate {
        int k;
        int rank;
        ColorerOutcome (*run)(const Multigraph&);
    };
    std::vector<Candidate> cands;
    bool outerplanar = cls.is_outerplanar && *cls.is_outerplanar;
    if (cls.is_tree && delta >= 3)
        cands.push_back({2 * delta, 0, &color_tree});
    if (cls.is_subcubic && outerplanar)
        cands.push_back({8, 1, &color_subcubic_outerplanar});
    if (cls.is_series_parallel_subcubic)
        cands.push_back({9, 2, &color_sp_subcubic});
    if (cls.is_2_degenerate && cls.is_subcubic)
        cands.push_back({10, 3, &color_2degenerate_subcubic});
    if (cls.is_claw_free && cls.is_subcubic)
        cands.push_back({11, 4, &color_clawfree_subcubic});
    if (outerplanar)
        cands.push_back({std::max(14, 3 * delta), 5, &color_outerplanar});
    if (assume_planar)
        cands.push_back({std::max(41, 3 * delta + 5), 6, &color_planar});
    cands.push_back({6 * delta - 4, 7, &color_general});

    auto best = std::min_element(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.k, a.rank) < std::tie(b.k, b.rank);
    });
    return best->run(g);
}

} // namespace ttone
