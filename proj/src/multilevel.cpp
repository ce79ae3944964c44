/******************************************************************************
 * multilevel.cpp
 *****************************************************************************/

#include "streampart/multilevel.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace streampart {

Clustering label_propagation_clustering(const Graph& graph,
                                        const LabelPropagationOptions& options,
                                        RngStream& perm_rng, RngStream& tie_rng) {
    const NodeID n = graph.node_count();
    const NodeID first_fixed = options.first_fixed;

    std::vector<NodeID> cluster_of(n);
    std::iota(cluster_of.begin(), cluster_of.end(), NodeID{0});
    std::vector<NodeWeight> cluster_weights(n);
    for (NodeID u = 0; u < n; ++u) {
        cluster_weights[u] = graph.node_weight(u);
    }

    std::vector<NodeID> permutation(n);
    std::iota(permutation.begin(), permutation.end(), NodeID{0});

    std::vector<EdgeWeight> connection(n, 0);
    std::vector<NodeID> touched;
    std::vector<NodeID> maximizers;

    for (int round = 0; round < options.rounds; ++round) {
        perm_rng.shuffle(permutation);
        std::uint64_t moves = 0;

        for (const NodeID node : permutation) {
            if (node >= first_fixed) {
                continue;
            }
            const NodeWeight node_weight = graph.node_weight(node);
            const NodeID current = cluster_of[node];

            for (const Arc& arc : graph.arcs(node)) {
                if (arc.target >= first_fixed) {
                    continue; // artificial nodes and their edges are ignored
                }
                if (!options.blocks.empty() &&
                    options.blocks[arc.target] != options.blocks[node]) {
                    continue;
                }
                const NodeID cluster = cluster_of[arc.target];
                if (connection[cluster] == 0) {
                    touched.push_back(cluster);
                }
                connection[cluster] += arc.weight;
            }

            EdgeWeight best = 0;
            maximizers.clear();
            for (const NodeID cluster : touched) {
                const bool feasible =
                    cluster == current ||
                    cluster_weights[cluster] + node_weight <=
                        options.max_cluster_weight;
                if (!feasible) {
                    connection[cluster] = 0;
                    continue;
                }
                if (maximizers.empty() || connection[cluster] > best) {
                    best = connection[cluster];
                    maximizers.clear();
                    maximizers.push_back(cluster);
                } else if (connection[cluster] == best) {
                    maximizers.push_back(cluster);
                }
                connection[cluster] = 0;
            }
            touched.clear();

            if (maximizers.empty()) {
                continue;
            }
            const NodeID target =
                maximizers.size() == 1
                    ? maximizers.front()
                    : maximizers[tie_rng.next_index(maximizers.size())];
            if (target != current) {
                cluster_weights[current] -= node_weight;
                cluster_weights[target] += node_weight;
                cluster_of[node] = target;
                ++moves;
            }
        }
        if (moves == 0) {
            break;
        }
    }

    // Compact: movable clusters by first appearance, fixed nodes trailing.
    Clustering result;
    result.cluster_of.assign(n, kInvalidBlock);
    std::vector<NodeID> remap(n, n);
    NodeID next_id = 0;
    for (NodeID u = 0; u < first_fixed; ++u) {
        const NodeID cluster = cluster_of[u];
        if (remap[cluster] == n) {
            remap[cluster] = next_id++;
        }
        result.cluster_of[u] = remap[cluster];
    }
    const NodeID movable_clusters = next_id;
    for (NodeID u = first_fixed; u < n; ++u) {
        result.cluster_of[u] = movable_clusters + (u - first_fixed);
    }
    result.cluster_count = movable_clusters + (n - first_fixed);
    result.cluster_weights.assign(result.cluster_count, 0);
    for (NodeID u = 0; u < n; ++u) {
        result.cluster_weights[result.cluster_of[u]] += graph.node_weight(u);
    }
    return result;
}

ContractionResult contract(const Graph& graph, const Clustering& clustering) {
    const NodeID coarse_count = clustering.cluster_count;
    GraphBuilder builder(coarse_count);
    for (NodeID c = 0; c < coarse_count; ++c) {
        builder.set_node_weight(c, clustering.cluster_weights[c]);
    }
    for (NodeID u = 0; u < graph.node_count(); ++u) {
        const NodeID cu = clustering.cluster_of[u];
        for (const Arc& arc : graph.arcs(u)) {
            const NodeID cv = clustering.cluster_of[arc.target];
            if (cu != cv) {
                builder.add_arc(cu, cv, arc.weight);
            }
        }
    }
    return {builder.build(), clustering.cluster_of};
}

NodeWeight assignable_cluster_cap(NodeWeight l_max, BlockID k,
                                  NodeWeight total_model_weight) {
    if (k < 2) {
        return l_max;
    }
    const NodeWeight slack =
        l_max * static_cast<NodeWeight>(k) - total_model_weight;
    return std::clamp<NodeWeight>(slack / (k - 1), 1, l_max);
}

NodeID coarsest_size_threshold(NodeID model_size, BlockID k, int x) {
    const NodeID by_size = model_size / (2 * static_cast<NodeID>(x) * k);
    const NodeID by_blocks = static_cast<NodeID>(x) * k;
    return std::max(by_size, by_blocks);
}

Hierarchy coarsen(const ModelGraph& model, NodeWeight max_cluster_weight,
                  const Config& cfg, RngStream& perm_rng, RngStream& tie_rng) {
    Hierarchy hierarchy;
    const NodeID threshold = coarsest_size_threshold(
        model.graph.node_count(), model.k, cfg.coarsest_factor_x);
    const bool restream = !model.initial_blocks.empty();

    const Graph* current = &model.graph;
    NodeID first_fixed = model.batch_node_count;
    std::vector<BlockID> current_blocks;
    if (restream) {
        current_blocks = model.initial_blocks;
        for (BlockID j = 0; j < model.k; ++j) {
            current_blocks.push_back(j);
        }
    }

    while (current->node_count() > threshold) {
        LabelPropagationOptions options;
        options.max_cluster_weight = max_cluster_weight;
        options.rounds = cfg.coarsening_rounds;
        options.first_fixed = first_fixed;
        options.blocks = current_blocks;

        const Clustering clustering =
            label_propagation_clustering(*current, options, perm_rng, tie_rng);
        if (clustering.cluster_count == current->node_count()) {
            break; // no size reduction
        }

        Hierarchy::Level level;
        ContractionResult contraction = contract(*current, clustering);
        level.graph = std::move(contraction.coarse);
        level.fine_to_coarse = std::move(contraction.fine_to_coarse);
        level.first_fixed = clustering.cluster_count - model.k;
        if (restream) {
            std::vector<BlockID> coarse_blocks(clustering.cluster_count,
                                               kInvalidBlock);
            for (NodeID u = 0; u < current->node_count(); ++u) {
                coarse_blocks[level.fine_to_coarse[u]] = current_blocks[u];
            }
            level.blocks = std::move(coarse_blocks);
        }
        hierarchy.levels.push_back(std::move(level));
        current = &hierarchy.levels.back().graph;
        first_fixed = hierarchy.levels.back().first_fixed;
        if (restream) {
            current_blocks = hierarchy.levels.back().blocks;
        }
    }
    return hierarchy;
}

std::uint64_t initial_partition(const Graph& coarsest, NodeID first_fixed,
                                const FennelParams& params, int weight_scale,
                                std::vector<BlockID>& assignment,
                                std::vector<NodeWeight>& block_weights,
                                RngStream& tie_rng) {
    const BlockID k = static_cast<BlockID>(coarsest.node_count() - first_fixed);
    assignment.assign(coarsest.node_count(), kInvalidBlock);
    block_weights.assign(k, 0);
    for (BlockID j = 0; j < k; ++j) {
        assignment[first_fixed + j] = j;
        block_weights[j] = coarsest.node_weight(first_fixed + j);
    }

    std::vector<EdgeWeight> connection(k, 0);
    std::vector<double> scores(k);
    std::vector<char> feasible(k);
    std::uint64_t fallbacks = 0;
    const double scale = static_cast<double>(weight_scale);

    for (NodeID u = 0; u < first_fixed; ++u) {
        const NodeWeight weight = coarsest.node_weight(u);
        for (const Arc& arc : coarsest.arcs(u)) {
            const BlockID block = assignment[arc.target];
            if (block != kInvalidBlock) {
                connection[block] += arc.weight;
            }
        }
        for (BlockID j = 0; j < k; ++j) {
            scores[j] = fennel_gain(static_cast<double>(connection[j]) / scale,
                                    weight, block_weights[j], params);
            feasible[j] = block_weights[j] + weight <= params.l_max ? 1 : 0;
            connection[j] = 0;
        }
        const BlockChoice choice =
            select_block(scores, feasible, block_weights, tie_rng);
        fallbacks += choice.fallback ? 1 : 0;
        assignment[u] = choice.block;
        block_weights[choice.block] += weight;
    }
    return fallbacks;
}

LocalSearchStats local_search(const Graph& graph, NodeID first_fixed,
                              const FennelParams& params, int weight_scale,
                              int rounds, std::vector<BlockID>& assignment,
                              std::vector<NodeWeight>& block_weights,
                              RngStream& perm_rng, RngStream& tie_rng) {
    LocalSearchStats stats;
    const NodeID n = graph.node_count();
    const double scale = static_cast<double>(weight_scale);

    std::vector<NodeID> permutation(n);
    std::iota(permutation.begin(), permutation.end(), NodeID{0});

    std::vector<EdgeWeight> connection(block_weights.size(), 0);
    std::vector<BlockID> touched;
    std::vector<BlockID> maximizers;

    for (int round = 0; round < rounds; ++round) {
        perm_rng.shuffle(permutation);
        std::uint64_t moves = 0;

        for (const NodeID node : permutation) {
            if (node >= first_fixed) {
                continue; // artificial nodes contribute edges but never move
            }
            const NodeWeight weight = graph.node_weight(node);
            const BlockID current = assignment[node];

            for (const Arc& arc : graph.arcs(node)) {
                const BlockID block = assignment[arc.target];
                if (connection[block] == 0) {
                    touched.push_back(block);
                }
                connection[block] += arc.weight;
            }

            const double base = fennel_gain(
                static_cast<double>(connection[current]) / scale, weight,
                block_weights[current] - weight, params);

            double best_delta = 0.0;
            maximizers.clear();
            for (const BlockID block : touched) {
                if (block == current) {
                    continue;
                }
                if (block_weights[block] + weight > params.l_max) {
                    continue;
                }
                const double delta =
                    fennel_gain(static_cast<double>(connection[block]) / scale,
                                weight, block_weights[block], params) -
                    base;
                if (delta > best_delta) {
                    best_delta = delta;
                    maximizers.clear();
                    maximizers.push_back(block);
                } else if (delta == best_delta && !maximizers.empty()) {
                    maximizers.push_back(block);
                }
            }
            for (const BlockID block : touched) {
                connection[block] = 0;
            }
            touched.clear();

            if (!maximizers.empty()) {
                const BlockID target =
                    maximizers[tie_rng.next_index(maximizers.size())];
                block_weights[current] -= weight;
                block_weights[target] += weight;
                assignment[node] = target;
                ++moves;
                ++stats.moves;
                stats.min_accepted_gain =
                    std::min(stats.min_accepted_gain, best_delta);
            }
        }
        if (moves == 0) {
            break;
        }
    }
    return stats;
}

PartitionModelResult partition_model(const ModelGraph& model,
                                     const FennelParams& params,
                                     const Config& cfg, bool restream,
                                     RngStream& perm_rng, RngStream& tie_rng) {
    if (restream == model.initial_blocks.empty()) {
        throw StateError("model construction does not match restream flag");
    }

    const NodeWeight cluster_cap = assignable_cluster_cap(
        params.l_max, model.k, model.graph.total_node_weight());
    Hierarchy hierarchy = coarsen(model, cluster_cap, cfg, perm_rng, tie_rng);
    const Graph* coarsest =
        hierarchy.levels.empty() ? &model.graph : &hierarchy.levels.back().graph;
    const NodeID coarsest_first_fixed = hierarchy.levels.empty()
                                            ? model.batch_node_count
                                            : hierarchy.levels.back().first_fixed;

    PartitionModelResult result;
    std::vector<BlockID> assignment;
    std::vector<NodeWeight> block_weights;

    if (restream) {
        // The previous pass is the initial partition.
        if (hierarchy.levels.empty()) {
            assignment = model.initial_blocks;
            for (BlockID j = 0; j < model.k; ++j) {
                assignment.push_back(j);
            }
        } else {
            assignment = hierarchy.levels.back().blocks;
        }
        block_weights.assign(model.k, 0);
        for (NodeID u = 0; u < coarsest->node_count(); ++u) {
            block_weights[assignment[u]] += coarsest->node_weight(u);
        }
    } else {
        result.fallback_count =
            initial_partition(*coarsest, coarsest_first_fixed, params,
                              model.weight_scale, assignment, block_weights,
                              tie_rng);
    }

    LocalSearchStats stats = local_search(
        *coarsest, coarsest_first_fixed, params, model.weight_scale,
        cfg.local_search_rounds, assignment, block_weights, perm_rng, tie_rng);
    result.local_search_moves += stats.moves;

    for (std::size_t level = hierarchy.levels.size(); level-- > 0;) {
        const Graph& fine = level == 0 ? model.graph
                                       : hierarchy.levels[level - 1].graph;
        const NodeID fine_first_fixed =
            level == 0 ? model.batch_node_count
                       : hierarchy.levels[level - 1].first_fixed;
        const auto& fine_to_coarse = hierarchy.levels[level].fine_to_coarse;

        std::vector<BlockID> fine_assignment(fine.node_count());
        for (NodeID u = 0; u < fine.node_count(); ++u) {
            fine_assignment[u] = assignment[fine_to_coarse[u]];
        }
        assignment = std::move(fine_assignment);

        stats = local_search(fine, fine_first_fixed, params, model.weight_scale,
                             cfg.local_search_rounds, assignment, block_weights,
                             perm_rng, tie_rng);
        result.local_search_moves += stats.moves;
    }

    for (BlockID j = 0; j < model.k; ++j) {
        assert(assignment[model.artificial_node(j)] == j);
    }
    result.batch_blocks.assign(assignment.begin(),
                               assignment.begin() + model.batch_node_count);
    return result;
}

} // namespace streampart
