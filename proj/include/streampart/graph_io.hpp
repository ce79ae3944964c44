/******************************************************************************
 * graph_io.hpp
 *****************************************************************************/

#pragma once

#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "streampart/definitions.hpp"
#include "streampart/graph.hpp"
#include "streampart/partition_state.hpp"

namespace streampart {

struct StreamHeader {
    NodeID node_count = 0;
    EdgeID edge_count = 0;
    bool has_node_weights = false;
    bool has_edge_weights = false;
    // Equals node_count for unit node weights. Weighted streams must carry the
    // total as a fourth header field, since it cannot be known up front.
    NodeWeight total_node_weight = 0;
};

struct BatchEntry {
    NodeWeight weight = 1;
    // 0-based global neighbor ids; duplicates within a line are already merged.
    std::vector<std::pair<NodeID, EdgeWeight>> neighbors;
};

// A window of consecutive stream nodes with their full adjacency lists.
struct Batch {
    NodeID first_global_id = 0;
    std::uint64_t batch_index = 0; // 1-based
    NodeID delta = 1;              // buffer size of the producing stream
    std::vector<BatchEntry> nodes;

    NodeID size() const { return nodes.size(); }
    NodeID end_global_id() const { return first_global_id + nodes.size(); }
};

// Streaming METIS reader that yields delta-sized batches in natural node
// order. Holds only the current line, never the whole adjacency structure.
class GraphStream {
public:
    GraphStream(const std::string& path, NodeID delta);
    GraphStream(std::unique_ptr<std::istream> source, NodeID delta,
                std::string name = "<stream>");

    const StreamHeader& header() const { return header_; }
    NodeID delta() const { return delta_; }
    std::uint64_t batch_count() const; // t = ceil(n / delta)
    std::uint64_t pass_index() const { return pass_index_; }
    NodeID cursor() const { return cursor_; }
    bool end_of_pass() const { return cursor_ == header_.node_count; }
    std::uint64_t dropped_self_loops() const { return dropped_self_loops_; }

    // Next min(delta, remaining) nodes, or nullopt at end-of-pass.
    std::optional<Batch> next_batch();

    // Back to node 0; only valid at end-of-pass and on seekable sources.
    void rewind();

private:
    void parse_header();
    std::string location() const;

    std::unique_ptr<std::istream> owned_source_;
    std::istream* source_ = nullptr;
    std::string name_;
    StreamHeader header_;
    NodeID delta_ = 1;
    NodeID cursor_ = 0;
    std::uint64_t pass_index_ = 1;
    std::uint64_t line_number_ = 0;
    std::streampos data_start_ = 0;
    std::uint64_t dropped_self_loops_ = 0;
    std::string line_buffer_;
};

// One 0-based block id per line, line i = assignment of global node i.
void write_partition(const PartitionState& state, const std::string& path);
void write_partition(const std::vector<BlockID>& assignment,
                     const std::string& path);
std::vector<BlockID> load_partition(const std::string& path, NodeID node_count,
                                    BlockID k);

// Streams all batches of the current pass into an in-memory Graph. The stream
// must be at the start of a pass; it is left at end-of-pass.
Graph assemble_graph(GraphStream& stream);

} // namespace streampart
