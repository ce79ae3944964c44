/******************************************************************************
 * model.cpp
 *****************************************************************************/

#include "streampart/model.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace streampart {

NodeID local_to_global(std::uint64_t batch_index, NodeID local_id, NodeID delta) {
    return local_id + (batch_index - 1) * delta;
}

NodeID global_to_local(std::uint64_t batch_index, NodeID global_id, NodeID delta) {
    return global_id - (batch_index - 1) * delta;
}

NodeID ModelGraph::to_global(NodeID local) const {
    if (is_artificial(local)) {
        throw StateError("local id " + std::to_string(local) +
                         " is an artificial node, not a stream node");
    }
    return local_to_global(batch_index, local, delta);
}

NodeID ModelGraph::to_local(NodeID global) const {
    const NodeID local = global_to_local(batch_index, global, delta);
    if (local >= batch_node_count) {
        throw StateError("global id " + std::to_string(global) +
                         " is not in batch " + std::to_string(batch_index));
    }
    return local;
}

namespace {

struct GhostInfo {
    NodeID global_id;
    // (batch-local neighbor, ghost edge weight), ascending local id.
    std::vector<std::pair<NodeID, EdgeWeight>> neighbors;
};

// Shared scan over the batch adjacency. Intra-batch edges are inserted once
// per pair; edges to assigned nodes accumulate per destination block and are
// attached to the artificial nodes afterwards.
class ModelAssembler {
public:
    ModelAssembler(const Batch& batch, const PartitionState& state,
                   const Config& cfg, int weight_scale)
        : batch_(batch),
          state_(state),
          b_(batch.size()),
          k_(cfg.k),
          scale_(weight_scale),
          builder_(batch.size() + cfg.k),
          block_conn_(cfg.k, 0) {}

    enum class ForwardEdges { drop, to_ghosts, to_blocks };

    void scan(ForwardEdges forward_mode) {
        for (NodeID local = 0; local < b_; ++local) {
            const BatchEntry& entry = batch_.nodes[local];
            const NodeID global = batch_.first_global_id + local;
            builder_.set_node_weight(local, entry.weight);

            for (const auto& [target, weight] : entry.neighbors) {
                if (target >= batch_.first_global_id &&
                    target < batch_.end_global_id()) {
                    const NodeID local_target = target - batch_.first_global_id;
                    if (local_target < local) {
                        builder_.add_edge(local, local_target,
                                          static_cast<EdgeWeight>(scale_) * weight);
                    }
                } else if (target < batch_.first_global_id) {
                    accumulate_block_edge(global, target, weight);
                } else {
                    switch (forward_mode) {
                        case ForwardEdges::drop:
                            break;
                        case ForwardEdges::to_ghosts:
                            record_ghost(local, target, weight);
                            break;
                        case ForwardEdges::to_blocks:
                            accumulate_block_edge(global, target, weight);
                            break;
                    }
                }
            }
            flush_block_edges(local);
        }
    }

    void contract_ghosts(std::vector<NodeWeight>& ghost_mass,
                         RngStream& ghost_rng) {
        // Hosts are drawn in ascending ghost id for reproducibility.
        std::sort(ghosts_.begin(), ghosts_.end(),
                  [](const GhostInfo& a, const GhostInfo& b) {
                      return a.global_id < b.global_id;
                  });
        for (const GhostInfo& ghost : ghosts_) {
            const std::size_t host_pos = ghost_rng.next_index(ghost.neighbors.size());
            const NodeID host = ghost.neighbors[host_pos].first;
            ghost_mass[host] += 1;
            builder_.add_node_weight(host, 1);
            for (std::size_t i = 0; i < ghost.neighbors.size(); ++i) {
                if (i == host_pos) {
                    continue; // the absorbed ghost edge becomes a self loop
                }
                const auto& [other, weight] = ghost.neighbors[i];
                builder_.add_edge(other, host, weight);
            }
        }
    }

    void set_artificial_weights(std::span<const NodeWeight> weights) {
        for (BlockID j = 0; j < k_; ++j) {
            builder_.set_node_weight(b_ + j, weights[j]);
        }
    }

    Graph finish() { return builder_.build(); }

private:
    void accumulate_block_edge(NodeID global_source, NodeID global_target,
                               EdgeWeight weight) {
        const BlockID block = state_.assignment(global_target);
        if (block == kInvalidBlock) {
            throw StateError("neighbor " + std::to_string(global_target) +
                             " of node " + std::to_string(global_source) +
                             " has no block assignment");
        }
        if (block_conn_[block] == 0) {
            touched_blocks_.push_back(block);
        }
        block_conn_[block] += weight;
    }

    void flush_block_edges(NodeID local) {
        for (const BlockID block : touched_blocks_) {
            builder_.add_edge(local, b_ + block,
                              static_cast<EdgeWeight>(scale_) * block_conn_[block]);
            block_conn_[block] = 0;
        }
        touched_blocks_.clear();
    }

    void record_ghost(NodeID local, NodeID global_target, EdgeWeight weight) {
        auto [it, inserted] =
            ghost_index_.try_emplace(global_target, ghosts_.size());
        if (inserted) {
            ghosts_.push_back(GhostInfo{global_target, {}});
        }
        ghosts_[it->second].neighbors.emplace_back(local, weight);
    }

    const Batch& batch_;
    const PartitionState& state_;
    NodeID b_;
    BlockID k_;
    int scale_;
    GraphBuilder builder_;
    std::vector<EdgeWeight> block_conn_;
    std::vector<BlockID> touched_blocks_;
    std::unordered_map<NodeID, std::size_t> ghost_index_;
    std::vector<GhostInfo> ghosts_;
};

ModelGraph make_model(const Batch& batch, const Config& cfg, int scale) {
    ModelGraph model;
    model.batch_node_count = batch.size();
    model.k = cfg.k;
    model.batch_index = batch.batch_index;
    model.delta = batch.delta;
    model.first_global_id = batch.first_global_id;
    model.weight_scale = scale;
    model.ghost_mass.assign(batch.size(), 0);
    return model;
}

} // namespace

ModelGraph build_basic_model(const Batch& batch, const PartitionState& state,
                             const Config& cfg) {
    ModelGraph model = make_model(batch, cfg, 1);
    ModelAssembler assembler(batch, state, cfg, model.weight_scale);
    assembler.scan(ModelAssembler::ForwardEdges::drop);
    assembler.set_artificial_weights(state.block_weights());
    model.graph = assembler.finish();
    return model;
}

ModelGraph build_extended_model(const Batch& batch, const PartitionState& state,
                                const Config& cfg, RngStream& ghost_rng) {
    ModelGraph model = make_model(batch, cfg, 2);
    ModelAssembler assembler(batch, state, cfg, model.weight_scale);
    assembler.scan(ModelAssembler::ForwardEdges::to_ghosts);
    assembler.contract_ghosts(model.ghost_mass, ghost_rng);
    assembler.set_artificial_weights(state.block_weights());
    model.graph = assembler.finish();
    return model;
}

ModelGraph build_restream_model(const Batch& batch, const PartitionState& state,
                                const Config& cfg) {
    ModelGraph model = make_model(batch, cfg, 1);
    ModelAssembler assembler(batch, state, cfg, model.weight_scale);
    assembler.scan(ModelAssembler::ForwardEdges::to_blocks);

    // Artificial nodes represent all batches except the current one.
    std::vector<NodeWeight> artificial_weights(state.block_weights().begin(),
                                               state.block_weights().end());
    model.initial_blocks.resize(batch.size());
    for (NodeID local = 0; local < batch.size(); ++local) {
        const NodeID global = batch.first_global_id + local;
        const BlockID block = state.assignment(global);
        if (block == kInvalidBlock) {
            throw StateError("restream requires a complete previous assignment; "
                             "node " + std::to_string(global) + " is unassigned");
        }
        model.initial_blocks[local] = block;
        artificial_weights[block] -= batch.nodes[local].weight;
    }
    assembler.set_artificial_weights(artificial_weights);
    model.graph = assembler.finish();
    return model;
}

} // namespace streampart
