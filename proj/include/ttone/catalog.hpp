#ifndef TTONE_CATALOG_HPP
#define TTONE_CATALOG_HPP

#include <string>

#include "ttone/graph.hpp"

namespace ttone {

/// Named graphs: "path:n", "cycle:n", "star:n", "complete:n",
/// "k4_minus_e", "petersen", "fig2".
Multigraph catalog(const std::string& name);

/// The Petersen graph with its conventional edge order: outer 5-cycle
/// (ids 0..4), inner pentagram (ids 5..9), spokes v_i u_i (ids 10..14).
Multigraph petersen_graph();

} // namespace ttone

#endif
