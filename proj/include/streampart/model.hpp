/******************************************************************************
 * model.hpp
 *****************************************************************************/

#pragma once

#include <vector>

#include "streampart/config.hpp"
#include "streampart/graph.hpp"
#include "streampart/graph_io.hpp"
#include "streampart/partition_state.hpp"
#include "streampart/rng.hpp"

namespace streampart {

// Per-batch model graph: local ids 0..b-1 are the batch nodes in stream
// order, local ids b..b+k-1 are the artificial nodes, one per block.
// Artificial nodes exist on every batch, with zero weight and no edges on the
// first one. No edge ever connects two artificial nodes.
struct ModelGraph {
    Graph graph;
    NodeID batch_node_count = 0; // b
    BlockID k = 0;
    std::uint64_t batch_index = 1; // 1-based i
    NodeID delta = 1;
    NodeID first_global_id = 0;
    // Regular stream edges carry weight_scale * omega; ghost-derived edges
    // carry raw omega, which realizes the halved ghost-edge priority with
    // integer weights. Gain evaluation divides connectivity by weight_scale.
    int weight_scale = 1;
    // Weight contributed by contracted ghost nodes, per batch node. Inflates
    // model node weights only; permanent assignments commit stream weights.
    std::vector<NodeWeight> ghost_mass;
    // Restream only: current block of each batch node, used as the starting
    // assignment. Empty in single-pass models.
    std::vector<BlockID> initial_blocks;

    NodeID artificial_node(BlockID block) const {
        return batch_node_count + block;
    }
    bool is_artificial(NodeID local) const { return local >= batch_node_count; }

    // global = local + (i-1)*delta; throws for artificial locals.
    NodeID to_global(NodeID local) const;
    NodeID to_local(NodeID global) const;
};

// Pure id arithmetic between batch-local and global ids, 1-based batch index.
NodeID local_to_global(std::uint64_t batch_index, NodeID local_id, NodeID delta);
NodeID global_to_local(std::uint64_t batch_index, NodeID global_id, NodeID delta);

// Batch-induced subgraph plus artificial nodes; edges to future nodes dropped.
ModelGraph build_basic_model(const Batch& batch, const PartitionState& state,
                             const Config& cfg);

// Basic model plus ghost contraction: every future neighbor is contracted
// into a uniformly drawn batch neighbor, its remaining ghost edges reattach
// to the host at half priority. Model size is b + k for every batch.
ModelGraph build_extended_model(const Batch& batch, const PartitionState& state,
                                const Config& cfg, RngStream& ghost_rng);

// All nodes are already assigned: forward edges go to the artificial node of
// the block the future node currently occupies, batch nodes carry their
// current block, and artificial weights exclude the current batch.
ModelGraph build_restream_model(const Batch& batch, const PartitionState& state,
                                const Config& cfg);

} // namespace streampart
