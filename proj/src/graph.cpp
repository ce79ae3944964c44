/******************************************************************************
 * graph.cpp
 *****************************************************************************/

#include "streampart/graph.hpp"

#include <algorithm>
#include <string>

namespace streampart {

GraphBuilder::GraphBuilder(NodeID node_count)
    : n_(node_count), adjacency_(node_count), node_weights_(node_count, 1) {}

void GraphBuilder::set_node_weight(NodeID u, NodeWeight w) {
    if (w < 0) {
        throw StateError("node weight must be non-negative");
    }
    node_weights_[u] = w;
}

void GraphBuilder::add_node_weight(NodeID u, NodeWeight w) {
    node_weights_[u] += w;
}

void GraphBuilder::add_edge(NodeID u, NodeID v, EdgeWeight w) {
    add_arc(u, v, w);
    add_arc(v, u, w);
}

void GraphBuilder::add_arc(NodeID u, NodeID v, EdgeWeight w) {
    if (u == v) {
        throw StateError("self loop on node " + std::to_string(u));
    }
    if (u >= n_ || v >= n_) {
        throw StateError("arc endpoint out of range");
    }
    if (w <= 0) {
        throw StateError("edge weight must be strictly positive");
    }
    adjacency_[u].push_back({v, w});
}

Graph GraphBuilder::build() {
    Graph g;
    g.first_out_.assign(n_ + 1, 0);
    g.node_weights_ = std::move(node_weights_);

    EdgeID arc_count = 0;
    for (NodeID u = 0; u < n_; ++u) {
        auto& list = adjacency_[u];
        std::sort(list.begin(), list.end(),
                  [](const Arc& a, const Arc& b) { return a.target < b.target; });
        // merge parallel arcs in place
        std::size_t out = 0;
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (out > 0 && list[out - 1].target == list[i].target) {
                list[out - 1].weight += list[i].weight;
            } else {
                list[out++] = list[i];
            }
        }
        list.resize(out);
        arc_count += out;
    }

    g.arcs_.reserve(arc_count);
    for (NodeID u = 0; u < n_; ++u) {
        g.first_out_[u] = g.arcs_.size();
        g.arcs_.insert(g.arcs_.end(), adjacency_[u].begin(), adjacency_[u].end());
        adjacency_[u].clear();
        adjacency_[u].shrink_to_fit();
    }
    g.first_out_[n_] = g.arcs_.size();

    if (g.arcs_.size() % 2 != 0) {
        throw StateError("arc list is not symmetric: odd arc count");
    }

    // Symmetry check: every arc must have a mirror of equal weight.
    for (NodeID u = 0; u < n_; ++u) {
        for (const Arc& arc : g.arcs(u)) {
            auto mirror = g.arcs(arc.target);
            auto it = std::lower_bound(
                mirror.begin(), mirror.end(), u,
                [](const Arc& a, NodeID id) { return a.target < id; });
            if (it == mirror.end() || it->target != u || it->weight != arc.weight) {
                throw StateError("asymmetric edge between nodes " +
                                 std::to_string(u) + " and " +
                                 std::to_string(arc.target));
            }
        }
        g.total_node_weight_ += g.node_weights_[u];
        for (const Arc& arc : g.arcs(u)) {
            if (arc.target > u) {
                g.total_edge_weight_ += arc.weight;
            }
        }
    }
    return g;
}

} // namespace streampart
