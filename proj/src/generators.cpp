/******************************************************************************
 * generators.cpp
 *****************************************************************************/

#include "streampart/generators.hpp"

#include <cmath>
#include <fstream>
#include <vector>

#include "streampart/rng.hpp"

namespace streampart {

namespace {

double unit_double(RngStream& rng) {
    return static_cast<double>(rng.next_raw() >> 11) * 0x1.0p-53;
}

} // namespace

Graph random_geometric_graph(NodeID n, double radius, std::uint64_t seed) {
    RngStream rng(splitmix64(seed));
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (NodeID i = 0; i < n; ++i) {
        xs[i] = unit_double(rng);
        ys[i] = unit_double(rng);
    }

    // Bucket grid with cell size >= radius; only 3x3 neighborhoods can hold
    // candidates.
    const NodeID cells = std::max<NodeID>(
        1, static_cast<NodeID>(std::floor(1.0 / std::max(radius, 1e-9))));
    std::vector<std::vector<NodeID>> buckets(cells * cells);
    auto cell_of = [&](double v) {
        auto c = static_cast<NodeID>(v * static_cast<double>(cells));
        return std::min(c, cells - 1);
    };
    for (NodeID i = 0; i < n; ++i) {
        buckets[cell_of(ys[i]) * cells + cell_of(xs[i])].push_back(i);
    }

    GraphBuilder builder(n);
    const double r2 = radius * radius;
    for (NodeID i = 0; i < n; ++i) {
        const NodeID cx = cell_of(xs[i]);
        const NodeID cy = cell_of(ys[i]);
        for (NodeID dy = cy == 0 ? 0 : cy - 1; dy <= std::min(cy + 1, cells - 1);
             ++dy) {
            for (NodeID dx = cx == 0 ? 0 : cx - 1;
                 dx <= std::min(cx + 1, cells - 1); ++dx) {
                for (const NodeID j : buckets[dy * cells + dx]) {
                    if (j <= i) {
                        continue;
                    }
                    const double ex = xs[i] - xs[j];
                    const double ey = ys[i] - ys[j];
                    if (ex * ex + ey * ey < r2) {
                        builder.add_edge(i, j, 1);
                    }
                }
            }
        }
    }
    return builder.build();
}

Graph erdos_renyi_graph(NodeID n, double p, std::uint64_t seed) {
    GraphBuilder builder(n);
    if (p > 0.0 && n > 1) {
        RngStream rng(splitmix64(seed));
        const double log_q = std::log(1.0 - p);
        for (NodeID i = 0; i + 1 < n; ++i) {
            NodeID j = i;
            while (true) {
                const double u = std::max(unit_double(rng), 1e-300);
                const double skip = std::floor(std::log(u) / log_q);
                if (skip >= static_cast<double>(n)) {
                    break;
                }
                j += 1 + static_cast<NodeID>(skip);
                if (j >= n) {
                    break;
                }
                builder.add_edge(i, j, 1);
            }
        }
    }
    return builder.build();
}

Graph grid_graph(NodeID rows, NodeID cols) {
    GraphBuilder builder(rows * cols);
    for (NodeID r = 0; r < rows; ++r) {
        for (NodeID c = 0; c < cols; ++c) {
            const NodeID id = r * cols + c;
            if (c + 1 < cols) {
                builder.add_edge(id, id + 1, 1);
            }
            if (r + 1 < rows) {
                builder.add_edge(id, id + cols, 1);
            }
        }
    }
    return builder.build();
}

void write_metis(std::ostream& out, const Graph& graph) {
    bool node_weighted = false;
    bool edge_weighted = false;
    for (NodeID u = 0; u < graph.node_count(); ++u) {
        node_weighted = node_weighted || graph.node_weight(u) != 1;
        for (const Arc& arc : graph.arcs(u)) {
            edge_weighted = edge_weighted || arc.weight != 1;
        }
    }

    out << graph.node_count() << " " << graph.edge_count();
    if (node_weighted && edge_weighted) {
        out << " 11";
    } else if (node_weighted) {
        out << " 10";
    } else if (edge_weighted) {
        out << " 1";
    }
    if (node_weighted) {
        out << " " << graph.total_node_weight();
    }
    out << "\n";

    for (NodeID u = 0; u < graph.node_count(); ++u) {
        bool first = true;
        if (node_weighted) {
            out << graph.node_weight(u);
            first = false;
        }
        for (const Arc& arc : graph.arcs(u)) {
            if (!first) {
                out << " ";
            }
            out << arc.target + 1;
            first = false;
            if (edge_weighted) {
                out << " " << arc.weight;
            }
        }
        out << "\n";
    }
}

void write_metis_file(const std::string& path, const Graph& graph) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open output file: " + path);
    }
    write_metis(out, graph);
    if (!out) {
        throw ParseError("failed writing graph file: " + path);
    }
}

} // namespace streampart
