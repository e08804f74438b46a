#ifndef TTONE_GRAPH_IO_HPP
#define TTONE_GRAPH_IO_HPP

#include <string>

#include "ttone/graph.hpp"

namespace ttone {

/// Standard header-less graph6 encoding (simple graphs only).
Multigraph parse_graph6(const std::string& text);
std::string to_graph6(const Multigraph& g);

/// Edgelist text: one "u v" pair per line, optionally "id u v".
/// Blank lines and lines starting with '#' are skipped.
Multigraph parse_edgelist(const std::string& text);
std::string to_edgelist(const Multigraph& g);

} // namespace ttone

#endif
