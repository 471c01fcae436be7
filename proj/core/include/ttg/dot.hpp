#pragma once

#include <string>

#include "ttg/spectrum.hpp"

namespace ttg {

/// Graphviz digraph of the enumerated spectrum: one node per point, labeled
/// by its prime (generic points by η), and an edge from each point to the
/// points covering it in the specialization order.
std::string emit_dot(const SpectrumModel& s);

}  // namespace ttg
