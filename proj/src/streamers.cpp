/******************************************************************************
 * streamers.cpp
 *****************************************************************************/

#include "streampart/streamers.hpp"

#include <chrono>

#include "streampart/model.hpp"
#include "streampart/multilevel.hpp"
#include "streampart/objective.hpp"
#include "streampart/rng.hpp"

namespace streampart {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

FennelParams make_params(const StreamHeader& header, const Config& cfg,
                         double tuning) {
    FennelParams params;
    params.alpha = fennel_alpha(header.node_count, header.edge_count, cfg.k);
    params.gamma = 1.5;
    params.tuning = tuning;
    params.l_max = compute_lmax(header.total_node_weight, cfg.k, cfg.epsilon);
    params.use_approx_pow = cfg.use_approx_pow;
    return params;
}

// Rewinds, streams the cut of the current assignment and appends it.
void record_pass_cut(GraphStream& stream, RunResult& result) {
    stream.rewind();
    const EdgeCutResult cut = edge_cut(stream, result.partition.raw_assignment());
    result.pass_cuts.push_back(cut.cut);
    result.edge_cut = cut.cut;
    result.total_edge_weight = cut.total_edge_weight;
    result.cut_fraction = cut.fraction();
}

void finish_run(RunResult& result) {
    result.balance = balance(result.partition);
}

void check_at_start(const GraphStream& stream) {
    if (stream.cursor() != 0) {
        throw StateError("driver requires a stream at the start of a pass");
    }
}

// One streaming pass of a one-pass scorer. On a restream sweep the node's own
// weight is debited from its block before scoring, so the scorer and the
// feasibility gate see the weights the blocks would have without the node.
// The scorer fills scores[j] from the connectivity and effective weights.
template <typename ScoreFn>
void onepass_sweep(GraphStream& stream, const Config& cfg, NodeWeight l_max,
                   bool reassign, RngStream& tie_rng, RunResult& result,
                   ScoreFn&& score) {
    std::vector<EdgeWeight> connection(cfg.k, 0);
    std::vector<NodeWeight> effective_weights(cfg.k, 0);
    std::vector<double> scores(cfg.k);
    std::vector<char> feasible(cfg.k);

    auto io_start = Clock::now();
    while (auto batch = stream.next_batch()) {
        result.runtime.io_ms += ms_since(io_start);
        const auto partition_start = Clock::now();
        for (NodeID local = 0; local < batch->size(); ++local) {
            const NodeID node = batch->first_global_id + local;
            const NodeWeight weight = batch->nodes[local].weight;
            const BlockID old_block =
                reassign ? result.partition.assignment(node) : kInvalidBlock;

            for (const auto& [target, w] : batch->nodes[local].neighbors) {
                if (result.partition.is_assigned(target)) {
                    connection[result.partition.assignment(target)] += w;
                }
            }
            for (BlockID j = 0; j < cfg.k; ++j) {
                effective_weights[j] = result.partition.block_weight(j) -
                                       (j == old_block ? weight : 0);
                feasible[j] = effective_weights[j] + weight <= l_max ? 1 : 0;
            }
            score(weight, connection, effective_weights, scores);
            const BlockChoice choice =
                select_block(scores, feasible, effective_weights, tie_rng);
            result.fallback_count += choice.fallback ? 1 : 0;
            if (reassign) {
                result.partition.reassign(node, choice.block, weight);
            } else {
                result.partition.assign(node, choice.block, weight);
            }
            for (BlockID j = 0; j < cfg.k; ++j) {
                connection[j] = 0;
            }
        }
        result.runtime.partition_ms += ms_since(partition_start);
        io_start = Clock::now();
    }
}

struct FennelScorer {
    const FennelParams* params;

    void operator()(NodeWeight weight, const std::vector<EdgeWeight>& connection,
                    std::span<const NodeWeight> block_weights,
                    std::vector<double>& scores) const {
        for (BlockID j = 0; j < scores.size(); ++j) {
            scores[j] = fennel_gain(static_cast<double>(connection[j]), weight,
                                    block_weights[j], *params);
        }
    }
};

struct LdgScorer {
    NodeWeight l_max;

    void operator()(NodeWeight, const std::vector<EdgeWeight>& connection,
                    std::span<const NodeWeight> block_weights,
                    std::vector<double>& scores) const {
        bool isolated = true;
        for (std::size_t j = 0; j < scores.size(); ++j) {
            if (connection[j] != 0) {
                isolated = false;
                break;
            }
        }
        for (std::size_t j = 0; j < scores.size(); ++j) {
            // A node without assigned neighbors follows the penalty alone,
            // which ranks blocks lightest-first.
            scores[j] = isolated
                            ? ldg_score(1.0, block_weights[j], l_max)
                            : ldg_score(static_cast<double>(connection[j]),
                                        block_weights[j], l_max);
        }
    }
};

} // namespace

RunResult run_fennel(GraphStream& stream, const Config& cfg) {
    cfg.validate();
    check_at_start(stream);
    // The one-pass baseline always uses the untuned alpha.
    const FennelParams params = make_params(stream.header(), cfg, 1.0);
    RunResult result(
        PartitionState(stream.header().node_count, cfg.k, params.l_max));
    RngStream tie_rng = RngStream::derived(cfg.seed, kTieBreakSalt);
    onepass_sweep(stream, cfg, params.l_max, false, tie_rng, result,
                  FennelScorer{&params});
    record_pass_cut(stream, result);
    finish_run(result);
    return result;
}

RunResult run_ldg(GraphStream& stream, const Config& cfg) {
    cfg.validate();
    check_at_start(stream);
    const NodeWeight l_max =
        compute_lmax(stream.header().total_node_weight, cfg.k, cfg.epsilon);
    RunResult result(PartitionState(stream.header().node_count, cfg.k, l_max));
    RngStream tie_rng = RngStream::derived(cfg.seed, kTieBreakSalt);
    onepass_sweep(stream, cfg, l_max, false, tie_rng, result, LdgScorer{l_max});
    record_pass_cut(stream, result);
    finish_run(result);
    return result;
}

RunResult run_refennel(GraphStream& stream, const Config& cfg) {
    cfg.validate();
    check_at_start(stream);
    const FennelParams params = make_params(stream.header(), cfg, 1.0);
    RunResult result(
        PartitionState(stream.header().node_count, cfg.k, params.l_max));
    RngStream tie_rng = RngStream::derived(cfg.seed, kTieBreakSalt);

    onepass_sweep(stream, cfg, params.l_max, false, tie_rng, result,
                  FennelScorer{&params});
    record_pass_cut(stream, result);

    for (int pass = 2; pass <= cfg.passes; ++pass) {
        stream.rewind();
        onepass_sweep(stream, cfg, params.l_max, true, tie_rng, result,
                      FennelScorer{&params});
        record_pass_cut(stream, result);
    }
    finish_run(result);
    return result;
}

RunResult run_hashing(GraphStream& stream, const Config& cfg) {
    cfg.validate();
    check_at_start(stream);
    const StreamHeader& header = stream.header();
    const NodeWeight l_max =
        compute_lmax(header.total_node_weight, cfg.k, cfg.epsilon);
    RunResult result(PartitionState(header.node_count, cfg.k, l_max));
    const std::uint64_t hash_seed = splitmix64(cfg.seed ^ kHashSalt);

    auto io_start = Clock::now();
    while (auto batch = stream.next_batch()) {
        result.runtime.io_ms += ms_since(io_start);
        const auto partition_start = Clock::now();
        for (NodeID local = 0; local < batch->size(); ++local) {
            const NodeID node = batch->first_global_id + local;
            const NodeWeight weight = batch->nodes[local].weight;
            BlockID block =
                static_cast<BlockID>(splitmix64(hash_seed ^ node) % cfg.k);

            if (result.partition.block_weight(block) + weight > l_max) {
                // Full bucket: lightest feasible block keeps the partition
                // balanced; lightest overall if nothing fits.
                BlockID lightest = 0;
                BlockID lightest_feasible = kInvalidBlock;
                for (BlockID j = 0; j < cfg.k; ++j) {
                    const NodeWeight bw = result.partition.block_weight(j);
                    if (bw < result.partition.block_weight(lightest)) {
                        lightest = j;
                    }
                    if (bw + weight <= l_max &&
                        (lightest_feasible == kInvalidBlock ||
                         bw < result.partition.block_weight(lightest_feasible))) {
                        lightest_feasible = j;
                    }
                }
                if (lightest_feasible != kInvalidBlock) {
                    block = lightest_feasible;
                    ++result.capacity_redirects;
                } else {
                    block = lightest;
                    ++result.fallback_count;
                }
            }
            result.partition.assign(node, block, weight);
        }
        result.runtime.partition_ms += ms_since(partition_start);
        io_start = Clock::now();
    }
    record_pass_cut(stream, result);
    finish_run(result);
    return result;
}

RunResult run_heistream(GraphStream& stream, const Config& cfg) {
    cfg.validate();
    check_at_start(stream);
    const StreamHeader& header = stream.header();
    const FennelParams params = make_params(header, cfg, cfg.alpha_tuning);

    RunResult result(PartitionState(header.node_count, cfg.k, params.l_max));
    RngStream tie_rng = RngStream::derived(cfg.seed, kTieBreakSalt);
    RngStream perm_rng = RngStream::derived(cfg.seed, kPermutationSalt);
    RngStream ghost_rng = RngStream::derived(cfg.seed, kGhostSalt);

    for (int pass = 1; pass <= cfg.passes; ++pass) {
        if (pass > 1) {
            stream.rewind();
        }
        const bool restream = pass > 1;
        auto io_start = Clock::now();
        while (auto batch = stream.next_batch()) {
            result.runtime.io_ms += ms_since(io_start);

            const auto model_start = Clock::now();
            ModelGraph model;
            if (restream) {
                model = build_restream_model(*batch, result.partition, cfg);
            } else if (cfg.model_kind == ModelKind::extended) {
                model = build_extended_model(*batch, result.partition, cfg,
                                             ghost_rng);
            } else {
                model = build_basic_model(*batch, result.partition, cfg);
            }
            result.runtime.model_ms += ms_since(model_start);

            const auto partition_start = Clock::now();
            const PartitionModelResult batch_result = partition_model(
                model, params, cfg, restream, perm_rng, tie_rng);
            result.fallback_count += batch_result.fallback_count;

            // Permanent assignment commits stream weights; ghost mass is
            // discarded here.
            for (NodeID local = 0; local < batch->size(); ++local) {
                const NodeID node = batch->first_global_id + local;
                const NodeWeight weight = batch->nodes[local].weight;
                if (restream) {
                    result.partition.reassign(
                        node, batch_result.batch_blocks[local], weight);
                } else {
                    result.partition.assign(
                        node, batch_result.batch_blocks[local], weight);
                }
            }
            result.runtime.partition_ms += ms_since(partition_start);
            io_start = Clock::now();
        }
        record_pass_cut(stream, result);
    }
    finish_run(result);
    return result;
}

RunResult run(GraphStream& stream, const Config& cfg) {
    switch (cfg.algorithm) {
        case Algorithm::heistream: return run_heistream(stream, cfg);
        case Algorithm::fennel: return run_fennel(stream, cfg);
        case Algorithm::refennel: return run_refennel(stream, cfg);
        case Algorithm::ldg: return run_ldg(stream, cfg);
        case Algorithm::hashing: return run_hashing(stream, cfg);
    }
    throw ConfigError("unknown algorithm");
}

} // namespace streampart
