/******************************************************************************
 * metrics.hpp
 *****************************************************************************/

#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "streampart/definitions.hpp"
#include "streampart/graph_io.hpp"
#include "streampart/partition_state.hpp"

namespace streampart {

struct EdgeCutResult {
    EdgeWeight cut = 0;
    EdgeWeight total_edge_weight = 0;

    double fraction() const {
        return total_edge_weight == 0
                   ? 0.0
                   : static_cast<double>(cut) / static_cast<double>(total_edge_weight);
    }
};

// Streams the adjacency once; every undirected edge is counted exactly once,
// at its smaller endpoint. The stream must be at the start of a pass and is
// left at end-of-pass.
EdgeCutResult edge_cut(GraphStream& stream, std::span<const BlockID> assignment);

// max block weight over average block weight.
double balance(const PartitionState& state);
double balance(std::span<const NodeWeight> block_weights);

// Blocks as nodes, total crossing weight as edge weights. The sum of the
// quotient edge weights equals the edge cut.
struct QuotientGraph {
    BlockID k = 0;
    std::vector<NodeWeight> block_weights;
    std::map<std::pair<BlockID, BlockID>, EdgeWeight> edges; // i < j

    EdgeWeight total_cut() const;
};

QuotientGraph quotient_graph(GraphStream& stream,
                             std::span<const BlockID> assignment, BlockID k);

// Requires strictly positive values.
double geometric_mean(std::span<const double> values);

// Improvement of A over B: (sigma_B / sigma_A - 1) * 100.
double improvement_percent(double sigma_a, double sigma_b);

// sigma_A / sigma_max.
double ratio_vs_max(double sigma_a, double sigma_max);

// For each tau: fraction of instances i with values[i] <= tau * best[i].
std::vector<double> performance_profile(std::span<const double> values,
                                        std::span<const double> best,
                                        std::span<const double> taus);

} // namespace streampart
