/******************************************************************************
 * streamers.hpp
 *****************************************************************************/

#pragma once

#include <vector>

#include "streampart/config.hpp"
#include "streampart/graph_io.hpp"
#include "streampart/metrics.hpp"
#include "streampart/partition_state.hpp"

namespace streampart {

struct PhaseTimings {
    double io_ms = 0.0;
    double model_ms = 0.0;
    double partition_ms = 0.0;

    double total_ms() const { return io_ms + model_ms + partition_ms; }
};

struct RunResult {
    PartitionState partition;
    EdgeWeight edge_cut = 0;
    EdgeWeight total_edge_weight = 0;
    double cut_fraction = 0.0;
    double balance = 1.0;
    PhaseTimings runtime;
    // Nodes for which no block satisfied the L_max constraint.
    std::uint64_t fallback_count = 0;
    // Hashing only: hashed block was full but another feasible block existed.
    std::uint64_t capacity_redirects = 0;
    std::vector<EdgeWeight> pass_cuts; // edge cut after each pass

    explicit RunResult(PartitionState state) : partition(std::move(state)) {}
};

// The stream must be positioned at the start of pass 1. All drivers leave the
// stream at end-of-pass; multi-pass runs and cut evaluation rewind it.
RunResult run_heistream(GraphStream& stream, const Config& cfg);
RunResult run_fennel(GraphStream& stream, const Config& cfg);
RunResult run_ldg(GraphStream& stream, const Config& cfg);
RunResult run_hashing(GraphStream& stream, const Config& cfg);
RunResult run_refennel(GraphStream& stream, const Config& cfg);

// Dispatch on cfg.algorithm.
RunResult run(GraphStream& stream, const Config& cfg);

} // namespace streampart
