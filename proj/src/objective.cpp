/******************************************************************************
 * objective.cpp
 *****************************************************************************/

#include "streampart/objective.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

namespace streampart {

double fennel_alpha(NodeID n, EdgeID m, BlockID k, double gamma) {
    if (n == 0) {
        throw ConfigError("alpha undefined for an empty graph");
    }
    if (k == 0) {
        throw ConfigError("alpha undefined for k = 0");
    }
    return static_cast<double>(m) * std::pow(static_cast<double>(k), gamma - 1.0) /
           std::pow(static_cast<double>(n), gamma);
}

double approx_pow_half(double x) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
    bits = (bits >> 1) + 0x1FF7A3BEA91D9B1BULL;
    double y = std::bit_cast<double>(bits);
    y = 0.5 * (y + x / y);
    y = 0.5 * (y + x / y);
    return y;
}

double fennel_penalty(NodeWeight block_weight, const FennelParams& params) {
    if (block_weight <= 0) {
        return 0.0;
    }
    const double w = static_cast<double>(block_weight);
    double powered;
    if (params.use_approx_pow && params.gamma == 1.5) {
        powered = approx_pow_half(w);
    } else {
        powered = std::pow(w, params.gamma - 1.0);
    }
    return params.tuning * params.alpha * params.gamma * powered;
}

double fennel_gain(double connectivity, NodeWeight node_weight,
                   NodeWeight block_weight, const FennelParams& params) {
    return connectivity -
           static_cast<double>(node_weight) * fennel_penalty(block_weight, params);
}

double ldg_score(double shared_neighbors, NodeWeight block_weight,
                 NodeWeight l_max) {
    return shared_neighbors *
           (1.0 - static_cast<double>(block_weight) / static_cast<double>(l_max));
}

BlockChoice select_block(std::span<const double> scores,
                         std::span<const char> feasible,
                         std::span<const NodeWeight> block_weights,
                         RngStream& rng) {
    const std::size_t k = scores.size();
    if (k == 0) {
        throw ConfigError("select_block requires at least one block");
    }

    double best = 0.0;
    std::size_t maximizer_count = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (!feasible[j]) {
            continue;
        }
        if (maximizer_count == 0 || scores[j] > best) {
            best = scores[j];
            maximizer_count = 1;
        } else if (scores[j] == best) {
            ++maximizer_count;
        }
    }

    if (maximizer_count == 0) {
        // No feasible block: minimum-weight block, lowest id on ties.
        std::size_t lightest = 0;
        for (std::size_t j = 1; j < k; ++j) {
            if (block_weights[j] < block_weights[lightest]) {
                lightest = j;
            }
        }
        return {static_cast<BlockID>(lightest), true};
    }

    std::uint64_t wanted = rng.next_index(maximizer_count);
    for (std::size_t j = 0; j < k; ++j) {
        if (feasible[j] && scores[j] == best) {
            if (wanted == 0) {
                return {static_cast<BlockID>(j), false};
            }
            --wanted;
        }
    }
    return {static_cast<BlockID>(k - 1), false}; // unreachable
}

} // namespace streampart
