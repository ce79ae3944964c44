/******************************************************************************
 * generators.hpp
 *****************************************************************************/

#pragma once

#include <cmath>
#include <ostream>
#include <string>

#include "streampart/graph.hpp"

namespace streampart {

// Radius rule for random geometric graphs: 0.55 * sqrt(ln n / n).
inline double rgg_radius(NodeID n) {
    return 0.55 * std::sqrt(std::log(static_cast<double>(n)) /
                            static_cast<double>(n));
}

// n uniform points in the unit square, edges between pairs with Euclidean
// distance below the radius. Node order is the generation order.
Graph random_geometric_graph(NodeID n, double radius, std::uint64_t seed);

// Erdos-Renyi G(n, p) via geometric skips over the pair sequence.
Graph erdos_renyi_graph(NodeID n, double p, std::uint64_t seed);

// rows x cols lattice with 4-neighborhoods, row-major node ids.
Graph grid_graph(NodeID rows, NodeID cols);

// METIS output. Emits the fmt field only when weights are non-unit; a
// node-weighted header additionally carries the total node weight.
void write_metis(std::ostream& out, const Graph& graph);
void write_metis_file(const std::string& path, const Graph& graph);

} // namespace streampart
