/******************************************************************************
 * test_util.hpp
 *
 * Shared helpers: in-memory streams, an independent METIS parser and edge-cut
 * oracle, random graphs and the small named corpus used across suites.
 *****************************************************************************/

#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "streampart/generators.hpp"
#include "streampart/graph.hpp"
#include "streampart/graph_io.hpp"
#include "streampart/rng.hpp"

namespace testutil {

using namespace streampart;

inline GraphStream make_stream(const std::string& metis, NodeID delta) {
    return GraphStream(std::make_unique<std::istringstream>(metis), delta,
                       "<memory>");
}

inline std::string metis_string(const Graph& graph) {
    std::ostringstream out;
    write_metis(out, graph);
    return out.str();
}

// Deliberately separate parsing path from GraphStream: plain stringstream
// token extraction, whole file at once.
struct NaiveGraph {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<long long> node_weights;
    std::vector<std::map<std::size_t, long long>> adjacency;
};

inline NaiveGraph parse_metis_naive(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    NaiveGraph g;
    int fmt = 0;
    long long header_total = -1;

    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '%') continue;
        std::istringstream h(line);
        h >> g.n >> g.m;
        if (!(h >> fmt)) fmt = 0;
        if (fmt == 10 || fmt == 11) h >> header_total;
        break;
    }
    const bool node_weights = fmt == 10 || fmt == 11;
    const bool edge_weights = fmt == 1 || fmt == 11;
    g.node_weights.assign(g.n, 1);
    g.adjacency.resize(g.n);

    std::size_t u = 0;
    while (u < g.n && std::getline(in, line)) {
        if (!line.empty() && line[0] == '%') continue;
        std::istringstream ls(line);
        if (node_weights) ls >> g.node_weights[u];
        long long neighbor;
        while (ls >> neighbor) {
            long long w = 1;
            if (edge_weights) ls >> w;
            if (static_cast<std::size_t>(neighbor - 1) == u) continue;
            g.adjacency[u][static_cast<std::size_t>(neighbor - 1)] += w;
        }
        ++u;
    }
    return g;
}

inline long long naive_edge_cut(const NaiveGraph& g,
                                const std::vector<BlockID>& assignment) {
    long long cut = 0;
    for (std::size_t u = 0; u < g.n; ++u) {
        for (const auto& [v, w] : g.adjacency[u]) {
            if (u < v && assignment[u] != assignment[v]) cut += w;
        }
    }
    return cut;
}

inline long long naive_edge_cut(const Graph& g,
                                const std::vector<BlockID>& assignment) {
    long long cut = 0;
    for (NodeID u = 0; u < g.node_count(); ++u) {
        for (const Arc& arc : g.arcs(u)) {
            if (u < arc.target && assignment[u] != assignment[arc.target]) {
                cut += arc.weight;
            }
        }
    }
    return cut;
}

// G(n, p)-style random unit-weight graph for property tests.
inline Graph random_unit_graph(NodeID n, double edge_probability,
                               RngStream& rng) {
    GraphBuilder builder(n);
    const std::uint64_t threshold = static_cast<std::uint64_t>(
        edge_probability * 18446744073709551615.0);
    for (NodeID i = 0; i < n; ++i) {
        for (NodeID j = i + 1; j < n; ++j) {
            if (rng.next_raw() < threshold) {
                builder.add_edge(i, j, 1);
            }
        }
    }
    return builder.build();
}

inline Graph path_graph(NodeID n) {
    GraphBuilder builder(n);
    for (NodeID i = 0; i + 1 < n; ++i) builder.add_edge(i, i + 1, 1);
    return builder.build();
}

inline Graph cycle_graph(NodeID n) {
    GraphBuilder builder(n);
    for (NodeID i = 0; i + 1 < n; ++i) builder.add_edge(i, i + 1, 1);
    builder.add_edge(n - 1, 0, 1);
    return builder.build();
}

inline Graph star_graph(NodeID leaves) {
    GraphBuilder builder(leaves + 1);
    for (NodeID i = 1; i <= leaves; ++i) builder.add_edge(0, i, 1);
    return builder.build();
}

inline Graph clique_graph(NodeID n) {
    GraphBuilder builder(n);
    for (NodeID i = 0; i < n; ++i) {
        for (NodeID j = i + 1; j < n; ++j) builder.add_edge(i, j, 1);
    }
    return builder.build();
}

struct NamedGraph {
    std::string name;
    std::string metis;
    NodeID n;
};

// Deterministic mixed corpus, all unit weights, n <= 1e5.
inline const std::vector<NamedGraph>& corpus() {
    static const std::vector<NamedGraph> graphs = [] {
        std::vector<NamedGraph> out;
        auto add = [&out](const std::string& name, const Graph& g) {
            out.push_back({name, metis_string(g), g.node_count()});
        };
        add("triangle", clique_graph(3));
        add("path_10", path_graph(10));
        add("cycle_17", cycle_graph(17));
        add("star_33", star_graph(33));
        add("clique_24", clique_graph(24));
        add("path_1000", path_graph(1000));
        add("grid_10x10", grid_graph(10, 10));
        add("grid_32x32", grid_graph(32, 32));
        add("grid_64x17", grid_graph(64, 17));
        add("grid_200x5", grid_graph(200, 5));
        for (std::uint64_t seed : {11, 12, 13}) {
            add("rgg_512_s" + std::to_string(seed),
                random_geometric_graph(512, rgg_radius(512), seed));
        }
        for (std::uint64_t seed : {21, 22}) {
            add("rgg_2048_s" + std::to_string(seed),
                random_geometric_graph(2048, rgg_radius(2048), seed));
        }
        for (std::uint64_t seed : {31, 32, 33}) {
            add("gnp_500_s" + std::to_string(seed),
                erdos_renyi_graph(500, 0.02, seed));
        }
        for (std::uint64_t seed : {41, 42}) {
            add("gnp_2000_s" + std::to_string(seed),
                erdos_renyi_graph(2000, 0.004, seed));
        }
        add("gnp_5000", erdos_renyi_graph(5000, 0.0015, 51));
        add("rgg_8192", random_geometric_graph(8192, rgg_radius(8192), 61));
        // sparse graph with isolated nodes mixed in
        {
            GraphBuilder builder(64);
            for (NodeID i = 0; i + 2 < 64; i += 2) builder.add_edge(i, i + 2, 1);
            out.push_back({"matchsticks_64", metis_string(builder.build()), 64});
        }
        add("single_node", [] {
            GraphBuilder b(1);
            return b.build();
        }());
        return out;
    }();
    return graphs;
}

} // namespace testutil
