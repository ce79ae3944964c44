/******************************************************************************
 * multilevel.hpp
 *****************************************************************************/

#pragma once

#include <span>
#include <vector>

#include "streampart/config.hpp"
#include "streampart/graph.hpp"
#include "streampart/model.hpp"
#include "streampart/objective.hpp"
#include "streampart/rng.hpp"

namespace streampart {

// Size-constrained clustering. Cluster ids are compact: movable clusters come
// first in order of their smallest member, fixed nodes keep trailing
// singleton ids. No cluster mixes fixed and movable nodes.
struct Clustering {
    std::vector<NodeID> cluster_of;
    std::vector<NodeWeight> cluster_weights;
    NodeID cluster_count = 0;
};

struct LabelPropagationOptions {
    NodeWeight max_cluster_weight = 0;
    int rounds = 5;
    // Nodes with id >= first_fixed never move and their edges are ignored.
    NodeID first_fixed = 0;
    // When non-empty, a node may only join clusters of nodes holding the same
    // block id (restream: cut edges are never contracted).
    std::span<const BlockID> blocks = {};
};

Clustering label_propagation_clustering(const Graph& graph,
                                        const LabelPropagationOptions& options,
                                        RngStream& perm_rng, RngStream& tie_rng);

struct ContractionResult {
    Graph coarse;
    std::vector<NodeID> fine_to_coarse;
};

// One coarse node per cluster, weights summed, inter-cluster parallel edges
// merged, intra-cluster edges dropped. Fixed nodes keep the trailing layout.
ContractionResult contract(const Graph& graph, const Clustering& clustering);

// floor(max(model_size / (2xk), xk)); coarsening stops at or below this.
NodeID coarsest_size_threshold(NodeID model_size, BlockID k, int x);

// Largest cluster weight that is always assignable under l_max: with total
// model mass T, some block holds at most (T - c)/k, so any c up to
// (k*l_max - T)/(k-1) fits somewhere. Clamped to [1, l_max].
NodeWeight assignable_cluster_cap(NodeWeight l_max, BlockID k,
                                  NodeWeight total_model_weight);

struct Hierarchy {
    struct Level {
        Graph graph;
        std::vector<NodeID> fine_to_coarse; // from the previous (finer) level
        NodeID first_fixed = 0;
        std::vector<BlockID> blocks; // restream only: inherited block per node
    };
    // levels[0] is the first contraction of the model; empty when the model
    // is already at or below the coarsest-size threshold.
    std::vector<Level> levels;
};

Hierarchy coarsen(const ModelGraph& model, NodeWeight max_cluster_weight,
                  const Config& cfg, RngStream& perm_rng, RngStream& tie_rng);

// Generalized Fennel assignment of all movable coarsest nodes in ascending id
// order over all k blocks, with the explicit L_max constraint. Artificial
// nodes are pre-assigned; block_weights must start at their weights.
// Returns the number of no-feasible-block fallbacks.
std::uint64_t initial_partition(const Graph& coarsest, NodeID first_fixed,
                                const FennelParams& params, int weight_scale,
                                std::vector<BlockID>& assignment,
                                std::vector<NodeWeight>& block_weights,
                                RngStream& tie_rng);

struct LocalSearchStats {
    std::uint64_t moves = 0;
    double min_accepted_gain = std::numeric_limits<double>::infinity();
};

// Label propagation over the generalized Fennel gain. A node moves only to a
// block owning one of its neighbors, only with strictly positive gain and
// only when the target stays within l_max. The gain of a move i -> j is
// evaluated with the node removed from its own block first, so the penalty of
// staying uses weight c(V_i) - c(u) and the target penalty uses c(V_j).
LocalSearchStats local_search(const Graph& graph, NodeID first_fixed,
                              const FennelParams& params, int weight_scale,
                              int rounds, std::vector<BlockID>& assignment,
                              std::vector<NodeWeight>& block_weights,
                              RngStream& perm_rng, RngStream& tie_rng);

struct PartitionModelResult {
    std::vector<BlockID> batch_blocks; // final block per batch node
    std::uint64_t fallback_count = 0;
    std::uint64_t local_search_moves = 0;
};

// coarsen -> initial partition (skipped on restream) -> uncoarsen with local
// search at every level. Artificial nodes end in their original blocks.
PartitionModelResult partition_model(const ModelGraph& model,
                                     const FennelParams& params,
                                     const Config& cfg, bool restream,
                                     RngStream& perm_rng, RngStream& tie_rng);

} // namespace streampart
