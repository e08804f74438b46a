#ifndef TTONE_COLORERS_INTERNAL_HPP
#define TTONE_COLORERS_INTERNAL_HPP

#include <vector>

#include "ttone/colorers.hpp"
#include "ttone/coloring.hpp"
#include "ttone/graph.hpp"

namespace ttone::detail {

/// Induced subgraph on the alive vertices plus id maps both ways.
struct InducedView {
    Multigraph sub;
    std::vector<int> orig_edge;   // sub edge -> original edge
    std::vector<int> sub_edge;    // original edge -> sub edge or -1
    std::vector<int> orig_vertex; // sub vertex -> original vertex
    std::vector<int> sub_vertex;  // original vertex -> sub vertex or -1
};

InducedView induced_view(const Multigraph& g, const std::vector<bool>& alive);

/// Recorded, validated coloring actions against one ambient graph.
/// Permutations rewrite the whole working coloring so later steps can argue
/// against fixed representative colors.
struct StepCtx {
    const Multigraph& g;
    PartialColoring c;
    std::vector<TraceStep> actions;

    StepCtx(const Multigraph& graph, PartialColoring coloring) : g(graph), c(std::move(coloring)) {}

    void permute(const std::vector<int>& img);
    void assign(int e, const Label& lab);  // throws defect_error on violation
    void recolor(int e, const Label& lab); // throws defect_error on violation
    void uncolor(int e);

    /// Identity on k colors.
    std::vector<int> identity_perm() const;
};

/// Permutation sending each (source -> target) pair, remaining colors packed
/// ascending onto the remaining targets.
std::vector<int> perm_from_pairs(int k, const std::vector<std::pair<int, int>>& pairs);

std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner);
std::vector<int> invert(const std::vector<int>& perm);
Label apply_perm(const std::vector<int>& perm, const Label& lab);

// Guaranteed extension steps on the ambient graph of ctx.
void step_pendant(StepCtx& ctx, int e);     // k >= 7, subcubic
void step_degree_two(StepCtx& ctx, int u);  // k >= 10, subcubic
void step_diamond(StepCtx& ctx, int u);     // k >= 9, cubic

/// Extends e by the lexicographically first valid label over the max
/// intersecting family of its free colors; defect when none fits.
void step_family_extend(StepCtx& ctx, int e, const char* what);

/// Extends e by the first valid 2-subset of its free colors.
void step_any_candidate(StepCtx& ctx, int e, const char* what);

ColorerOutcome finish_outcome(const Multigraph& g, PartialColoring coloring,
                              std::vector<TraceStep> trace, bool fallback_used, std::string strategy);

/// Master coloring restricted to the view (master may hold edges of other,
/// already finished components; those stay out of the working copy).
PartialColoring view_coloring(const InducedView& view, const PartialColoring& master);

/// Applies the step's actions to the master coloring and trace, translating
/// edge ids; permutations rewrite every master label, matching replay.
void fold_step(const InducedView& view, const StepCtx& ctx, PartialColoring& master,
               std::vector<TraceStep>& trace);

} // namespace ttone::detail

#endif
