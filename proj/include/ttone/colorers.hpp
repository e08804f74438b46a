#ifndef TTONE_COLORERS_HPP
#define TTONE_COLORERS_HPP

#include <string>
#include <vector>

#include "ttone/coloring.hpp"
#include "ttone/graph.hpp"

namespace ttone {

/// One replayable step of a constructive coloring.
struct TraceStep {
    enum class Kind { Assign, Recolor, Uncolor, Permute };
    Kind kind = Kind::Assign;
    int edge = -1;         // Assign / Recolor / Uncolor
    Label label;           // Assign / Recolor
    std::vector<int> perm; // Permute: perm[c-1] is the image of color c
};

struct ColorerOutcome {
    PartialColoring coloring; // complete on success
    std::vector<TraceStep> trace;
    bool fallback_used = false;
    std::string strategy;
};

/// Applies the steps to an empty coloring; reproduces the outcome exactly.
PartialColoring replay_trace(const std::vector<TraceStep>& trace, int t, int k);

std::string outcome_to_text(const ColorerOutcome& out);

// ---- constructive colorers, one per bound -------------------------------

/// Trees with max degree >= 3 at exactly k = 2*Delta: peel leaves from the
/// deepest internal vertex, extend back with the recolor-swap when needed.
ColorerOutcome color_tree(const Multigraph& g);

/// Any simple graph with Delta >= 2 at k = 6*Delta - 4 by greedy extension
/// over max intersecting families.
ColorerOutcome color_general(const Multigraph& g);

/// Planar graphs (caller-asserted) at k = max(41, 3*Delta + 5): peel a
/// low-degree vertex with few high-degree neighbors, re-add its edges
/// high-degree ends first.
ColorerOutcome color_planar(const Multigraph& g);

/// Outerplanar graphs at k = max(14, 3*Delta): peel a pendant edge or a
/// degree-2 vertex with a low-degree neighbor.
ColorerOutcome color_outerplanar(const Multigraph& g);

/// Claw-free subcubic graphs at k = 11 (K4 itself routes to the exact
/// solver at k = 9).
ColorerOutcome color_clawfree_subcubic(const Multigraph& g);

/// 2-degenerate subcubic graphs at k = 10.
ColorerOutcome color_2degenerate_subcubic(const Multigraph& g);

/// Series-parallel subcubic multigraphs at k = 9: reduce to a parallel pair,
/// then replay the construction forward.
ColorerOutcome color_sp_subcubic(const Multigraph& g);

/// Subcubic outerplanar graphs at k = 8 via pendant faces; falls back to the
/// exact solver when no pendant face exists and flags the fallback.
ColorerOutcome color_subcubic_outerplanar(const Multigraph& g);

/// Dispatch to the applicable colorer with the smallest guaranteed palette.
ColorerOutcome auto_color(const Multigraph& g, bool assume_planar = false);

// ---- subcubic extension subroutines --------------------------------------

/// Pendant edge, k >= 7: one end of e has degree one.
PartialColoring extend_pendant_edge(const Multigraph& g, const PartialColoring& c, int e);

/// Degree-2 vertex with both incident edges uncolored, k >= 10.
PartialColoring extend_degree_two(const Multigraph& g, const PartialColoring& c, int u);

/// Diamond apex in a cubic graph, k >= 9: u's neighbors u1,u2,u3 with u2
/// adjacent to both others; colors uu1, uu3, then uu2.
PartialColoring extend_diamond(const Multigraph& g, const PartialColoring& c, int u);

/// Valid 2-tone labels for the cycle C_n realizing the exact values:
/// 6 colors for n in {3,4,7}, 5 otherwise.
std::vector<Label> cycle_pattern_labels(int n);

} // namespace ttone

#endif
