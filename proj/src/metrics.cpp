/******************************************************************************
 * metrics.cpp
 *****************************************************************************/

#include "streampart/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace streampart {

EdgeCutResult edge_cut(GraphStream& stream, std::span<const BlockID> assignment) {
    if (assignment.size() != stream.header().node_count) {
        throw StateError("assignment length " + std::to_string(assignment.size()) +
                         " does not match node count " +
                         std::to_string(stream.header().node_count));
    }
    if (stream.cursor() != 0) {
        throw StateError("edge cut requires a stream at start of pass");
    }
    EdgeCutResult result;
    while (auto batch = stream.next_batch()) {
        for (NodeID local = 0; local < batch->size(); ++local) {
            const NodeID u = batch->first_global_id + local;
            for (const auto& [v, w] : batch->nodes[local].neighbors) {
                if (u < v) {
                    result.total_edge_weight += w;
                    if (assignment[u] != assignment[v]) {
                        result.cut += w;
                    }
                }
            }
        }
    }
    return result;
}

double balance(std::span<const NodeWeight> block_weights) {
    NodeWeight total = 0;
    NodeWeight max_weight = 0;
    for (const NodeWeight w : block_weights) {
        total += w;
        max_weight = std::max(max_weight, w);
    }
    if (total == 0) {
        return 1.0;
    }
    const double average =
        static_cast<double>(total) / static_cast<double>(block_weights.size());
    return static_cast<double>(max_weight) / average;
}

double balance(const PartitionState& state) {
    return balance(state.block_weights());
}

EdgeWeight QuotientGraph::total_cut() const {
    EdgeWeight sum = 0;
    for (const auto& [blocks, weight] : edges) {
        sum += weight;
    }
    return sum;
}

QuotientGraph quotient_graph(GraphStream& stream,
                             std::span<const BlockID> assignment, BlockID k) {
    if (assignment.size() != stream.header().node_count) {
        throw StateError("assignment length does not match node count");
    }
    if (stream.cursor() != 0) {
        throw StateError("quotient graph requires a stream at start of pass");
    }
    QuotientGraph quotient;
    quotient.k = k;
    quotient.block_weights.assign(k, 0);
    while (auto batch = stream.next_batch()) {
        for (NodeID local = 0; local < batch->size(); ++local) {
            const NodeID u = batch->first_global_id + local;
            quotient.block_weights[assignment[u]] += batch->nodes[local].weight;
            for (const auto& [v, w] : batch->nodes[local].neighbors) {
                if (u < v && assignment[u] != assignment[v]) {
                    const BlockID a = std::min(assignment[u], assignment[v]);
                    const BlockID b = std::max(assignment[u], assignment[v]);
                    quotient.edges[{a, b}] += w;
                }
            }
        }
    }
    return quotient;
}

double geometric_mean(std::span<const double> values) {
    if (values.empty()) {
        throw std::domain_error("geometric mean of an empty set");
    }
    double log_sum = 0.0;
    for (const double v : values) {
        if (v <= 0.0) {
            throw std::domain_error("geometric mean requires positive values");
        }
        log_sum += std::log(v);
    }
    return std::exp(log_sum / static_cast<double>(values.size()));
}

double improvement_percent(double sigma_a, double sigma_b) {
    return (sigma_b / sigma_a - 1.0) * 100.0;
}

double ratio_vs_max(double sigma_a, double sigma_max) {
    return sigma_a / sigma_max;
}

std::vector<double> performance_profile(std::span<const double> values,
                                        std::span<const double> best,
                                        std::span<const double> taus) {
    if (values.size() != best.size()) {
        throw std::invalid_argument("profile inputs differ in length");
    }
    std::vector<double> fractions;
    fractions.reserve(taus.size());
    for (const double tau : taus) {
        std::size_t within = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] <= tau * best[i]) {
                ++within;
            }
        }
        fractions.push_back(values.empty()
                                ? 0.0
                                : static_cast<double>(within) /
                                      static_cast<double>(values.size()));
    }
    return fractions;
}

} // namespace streampart
