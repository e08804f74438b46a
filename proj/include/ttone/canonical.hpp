#ifndef TTONE_CANONICAL_HPP
#define TTONE_CANONICAL_HPP

#include <string>
#include <vector>

#include "ttone/graph.hpp"

namespace ttone {

/// Canonical relabeling of a small simple graph: distance-profile seeded
/// partition refinement with backtracking over the remaining choices.
/// Returns the permutation old vertex -> canonical position.
std::vector<int> canonical_labeling(const Multigraph& g);

/// graph6 string of the canonically relabeled graph. Equal strings
/// characterize isomorphism.
std::string canonical_graph6(const Multigraph& g);

bool is_isomorphic(const Multigraph& a, const Multigraph& b);

} // namespace ttone

#endif
