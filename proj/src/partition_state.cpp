/******************************************************************************
 * partition_state.cpp
 *****************************************************************************/

#include "streampart/partition_state.hpp"

#include <cmath>
#include <string>

namespace streampart {

NodeWeight compute_lmax(NodeWeight total_weight, BlockID k, double epsilon) {
    if (k == 0) {
        throw ConfigError("block count k must be at least 1");
    }
    if (total_weight < 0) {
        throw ConfigError("total weight must be non-negative");
    }
    if (epsilon < 0.0) {
        throw ConfigError("imbalance epsilon must be non-negative");
    }
    const double scaled = epsilon * 10000.0;
    const long long eps_ten_thousandths = std::llround(scaled);
    if (std::abs(scaled - static_cast<double>(eps_ten_thousandths)) > 1e-6) {
        throw ConfigError("epsilon must be a multiple of 0.0001");
    }
    using uint128 = unsigned __int128;
    const uint128 numerator =
        static_cast<uint128>(10000 + eps_ten_thousandths) *
        static_cast<uint128>(total_weight);
    const uint128 denominator = static_cast<uint128>(10000) * k;
    return static_cast<NodeWeight>((numerator + denominator - 1) / denominator);
}

PartitionState::PartitionState(NodeID node_count, BlockID k, NodeWeight l_max)
    : assignment_(node_count, kInvalidBlock),
      block_weights_(k, 0),
      k_(k),
      l_max_(l_max) {
    if (k == 0) {
        throw ConfigError("block count k must be at least 1");
    }
}

void PartitionState::check_block(BlockID block) const {
    if (block >= k_) {
        throw StateError("block id " + std::to_string(block) +
                         " out of range, k = " + std::to_string(k_));
    }
}

void PartitionState::assign(NodeID node, BlockID block, NodeWeight weight) {
    check_block(block);
    if (assignment_[node] != kInvalidBlock) {
        throw StateError("node " + std::to_string(node) + " already assigned");
    }
    assignment_[node] = block;
    block_weights_[block] += weight;
    ++assigned_count_;
    assigned_weight_ += weight;
}

void PartitionState::reassign(NodeID node, BlockID block, NodeWeight weight) {
    check_block(block);
    const BlockID old_block = assignment_[node];
    if (old_block == kInvalidBlock) {
        throw StateError("node " + std::to_string(node) +
                         " is unassigned, cannot reassign");
    }
    if (old_block == block) {
        return;
    }
    block_weights_[old_block] -= weight;
    block_weights_[block] += weight;
    assignment_[node] = block;
}

} // namespace streampart
