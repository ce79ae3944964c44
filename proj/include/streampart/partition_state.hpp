/******************************************************************************
 * partition_state.hpp
 *****************************************************************************/

#pragma once

#include <span>
#include <vector>

#include "streampart/definitions.hpp"

namespace streampart {

// Balance bound ceil((1+epsilon) * total_weight / k), evaluated in integer
// arithmetic. epsilon must be a non-negative multiple of 0.0001 so the bound
// is reproducible bit-exactly.
NodeWeight compute_lmax(NodeWeight total_weight, BlockID k, double epsilon);

// Per-node block assignment over all n global nodes plus the k running block
// weights. block_weights[i] always equals the summed weight of the nodes
// currently assigned to block i.
class PartitionState {
public:
    PartitionState(NodeID node_count, BlockID k, NodeWeight l_max);

    BlockID k() const { return k_; }
    NodeWeight l_max() const { return l_max_; }
    NodeID node_count() const { return assignment_.size(); }

    bool is_assigned(NodeID node) const {
        return assignment_[node] != kInvalidBlock;
    }
    BlockID assignment(NodeID node) const { return assignment_[node]; }
    const std::vector<BlockID>& raw_assignment() const { return assignment_; }

    NodeWeight block_weight(BlockID block) const { return block_weights_[block]; }
    std::span<const NodeWeight> block_weights() const { return block_weights_; }

    NodeID assigned_count() const { return assigned_count_; }
    NodeWeight assigned_weight() const { return assigned_weight_; }
    bool complete() const { return assigned_count_ == assignment_.size(); }

    // First assignment of a node. The node must be unassigned.
    void assign(NodeID node, BlockID block, NodeWeight weight);

    // Restream move: debits the node's weight from its old block first.
    // Reassigning to the same block leaves the weights unchanged.
    void reassign(NodeID node, BlockID block, NodeWeight weight);

private:
    void check_block(BlockID block) const;

    std::vector<BlockID> assignment_;
    std::vector<NodeWeight> block_weights_;
    BlockID k_;
    NodeWeight l_max_;
    NodeID assigned_count_ = 0;
    NodeWeight assigned_weight_ = 0;
};

} // namespace streampart
