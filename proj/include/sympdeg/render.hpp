#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sympdeg/symdegen.hpp"

namespace sympdeg::render {

/// Upper-triangular rows, right-aligned, one line per row.
std::vector<std::string> matrix_lines(const RankSequence& r);

/// One line per segment copy: dots at its vertices joined by dashes.
std::string coefficient_quiver(const Representation& rep);

/// Columns: step, M(i), N(i), peeled L, Z(i), coefficient quiver of Z(i).
std::string sym_path_table(const std::vector<DegenStep>& path);

/// Hasse diagram; nodes are labelled by their segment lists.
std::string dot(const std::vector<Representation>& nodes,
                const std::vector<std::pair<Representation, Representation>>& edges);

}  // namespace sympdeg::render
