/******************************************************************************
 * graph.hpp
 *****************************************************************************/

#pragma once

#include <span>
#include <vector>

#include "streampart/definitions.hpp"

namespace streampart {

struct Arc {
    NodeID target;
    EdgeWeight weight;
};

// Compressed adjacency for an undirected graph with no self loops and no
// parallel edges. Every edge {u,v} is stored as two arcs of equal weight.
class Graph {
public:
    Graph() = default;

    NodeID node_count() const { return node_weights_.size(); }
    EdgeID edge_count() const { return arcs_.size() / 2; }

    NodeWeight node_weight(NodeID u) const { return node_weights_[u]; }
    NodeWeight total_node_weight() const { return total_node_weight_; }
    EdgeWeight total_edge_weight() const { return total_edge_weight_; }

    EdgeID degree(NodeID u) const { return first_out_[u + 1] - first_out_[u]; }

    std::span<const Arc> arcs(NodeID u) const {
        return {arcs_.data() + first_out_[u], arcs_.data() + first_out_[u + 1]};
    }

private:
    friend class GraphBuilder;

    std::vector<EdgeID> first_out_;
    std::vector<Arc> arcs_;
    std::vector<NodeWeight> node_weights_;
    NodeWeight total_node_weight_ = 0;
    EdgeWeight total_edge_weight_ = 0;
};

// Accumulates arcs with duplicates, then build() sorts each adjacency, merges
// parallel entries by weight sum and checks the symmetry invariant.
class GraphBuilder {
public:
    explicit GraphBuilder(NodeID node_count);

    void set_node_weight(NodeID u, NodeWeight w);
    void add_node_weight(NodeID u, NodeWeight w);

    // Inserts both directions of {u,v}. Self loops are rejected.
    void add_edge(NodeID u, NodeID v, EdgeWeight w);
    // Inserts u -> v only; the mirror arc must arrive from another call.
    void add_arc(NodeID u, NodeID v, EdgeWeight w);

    Graph build();

private:
    NodeID n_;
    std::vector<std::vector<Arc>> adjacency_;
    std::vector<NodeWeight> node_weights_;
};

} // namespace streampart
