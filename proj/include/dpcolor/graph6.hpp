#pragma once

#include <string>

#include "dpcolor/multigraph.hpp"

namespace dpcolor {

// graph6 text format for simple graphs (optional ">>graph6<<" header accepted).
Multigraph read_graph6(const std::string& line);
std::string write_graph6(const Multigraph& g);  // pre: simple

}  // namespace dpcolor
