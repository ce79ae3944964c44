/******************************************************************************
 * objective.hpp
 *****************************************************************************/

#pragma once

#include <span>

#include "streampart/definitions.hpp"
#include "streampart/rng.hpp"

namespace streampart {

// Parameters of the generalized weighted Fennel gain
//   gain(u -> i) = conn(u, V_i) - c(u) * tuning * alpha * gamma * c(V_i)^(gamma-1).
struct FennelParams {
    double alpha = 0.0;
    double gamma = 1.5;
    double tuning = 1.0;
    NodeWeight l_max = 0;
    bool use_approx_pow = false;
};

// alpha = m * k^(gamma-1) / n^gamma; for gamma = 3/2 this is sqrt(k)*m/n^1.5.
// Computed once per run from the global stream header.
double fennel_alpha(NodeID n, EdgeID m, BlockID k, double gamma = 1.5);

// x^(1/2) via exponent halving plus two Newton steps. Relative error is below
// 1e-7 on [1, 2^40], well inside the documented 1e-3 bound.
double approx_pow_half(double x);

double fennel_penalty(NodeWeight block_weight, const FennelParams& params);

double fennel_gain(double connectivity, NodeWeight node_weight,
                   NodeWeight block_weight, const FennelParams& params);

// score = shared_neighbors * (1 - block_weight / l_max)
double ldg_score(double shared_neighbors, NodeWeight block_weight,
                 NodeWeight l_max);

struct BlockChoice {
    BlockID block;
    bool fallback; // no feasible block existed; lightest block was used
};

// Argmax over feasible blocks; ties are broken by exactly one uniform draw
// over the maximizers (one draw per decision, also when the maximizer is
// unique). With no feasible block the minimum-weight block is returned,
// lowest id first, consuming no draw.
BlockChoice select_block(std::span<const double> scores,
                         std::span<const char> feasible,
                         std::span<const NodeWeight> block_weights,
                         RngStream& rng);

} // namespace streampart
