/******************************************************************************
 * graph_io.cpp
 *****************************************************************************/

#include "streampart/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace streampart {

namespace {

// Whitespace-separated unsigned integers; METIS lines contain nothing else.
class LineScanner {
public:
    explicit LineScanner(const std::string& line)
        : pos_(line.data()), end_(line.data() + line.size()) {}

    std::optional<std::uint64_t> next() {
        while (pos_ != end_ && (*pos_ == ' ' || *pos_ == '\t' || *pos_ == '\r')) {
            ++pos_;
        }
        if (pos_ == end_) {
            return std::nullopt;
        }
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(pos_, end_, value);
        if (ec != std::errc() || ptr == pos_) {
            return std::nullopt;
        }
        pos_ = ptr;
        return value;
    }

    bool at_end() {
        while (pos_ != end_ && (*pos_ == ' ' || *pos_ == '\t' || *pos_ == '\r')) {
            ++pos_;
        }
        return pos_ == end_;
    }

private:
    const char* pos_;
    const char* end_;
};

} // namespace

GraphStream::GraphStream(const std::string& path, NodeID delta)
    : name_(path), delta_(delta) {
    auto file = std::make_unique<std::ifstream>(path);
    if (!*file) {
        throw ParseError("cannot open graph file: " + path);
    }
    owned_source_ = std::move(file);
    source_ = owned_source_.get();
    parse_header();
}

GraphStream::GraphStream(std::unique_ptr<std::istream> source, NodeID delta,
                         std::string name)
    : owned_source_(std::move(source)),
      source_(owned_source_.get()),
      name_(std::move(name)),
      delta_(delta) {
    parse_header();
}

std::string GraphStream::location() const {
    return name_ + ":" + std::to_string(line_number_);
}

void GraphStream::parse_header() {
    if (delta_ < 1) {
        throw ConfigError("buffer size delta must be at least 1");
    }
    while (std::getline(*source_, line_buffer_)) {
        ++line_number_;
        if (!line_buffer_.empty() && line_buffer_[0] == '%') {
            continue;
        }
        break;
    }
    if (!*source_ && line_buffer_.empty()) {
        throw ParseError(location() + ": missing header line");
    }

    LineScanner scanner(line_buffer_);
    auto n = scanner.next();
    auto m = scanner.next();
    if (!n || !m) {
        throw ParseError(location() + ": malformed header, expected \"n m [fmt]\"");
    }
    header_.node_count = *n;
    header_.edge_count = *m;

    if (auto fmt = scanner.next()) {
        switch (*fmt) {
            case 0: break;
            case 1: header_.has_edge_weights = true; break;
            case 10: header_.has_node_weights = true; break;
            case 11:
                header_.has_node_weights = true;
                header_.has_edge_weights = true;
                break;
            default:
                throw ParseError(location() + ": unknown format code " +
                                 std::to_string(*fmt));
        }
    }
    if (header_.has_node_weights) {
        auto total = scanner.next();
        if (!total) {
            throw ParseError(location() +
                             ": node-weighted stream requires the total node "
                             "weight as a fourth header field");
        }
        header_.total_node_weight = static_cast<NodeWeight>(*total);
    } else {
        header_.total_node_weight = static_cast<NodeWeight>(header_.node_count);
    }
    if (!scanner.at_end()) {
        throw ParseError(location() + ": trailing tokens in header");
    }
    data_start_ = source_->tellg();
}

std::uint64_t GraphStream::batch_count() const {
    if (header_.node_count == 0) {
        return 0;
    }
    return (header_.node_count + delta_ - 1) / delta_;
}

std::optional<Batch> GraphStream::next_batch() {
    const NodeID n = header_.node_count;
    if (cursor_ >= n) {
        return std::nullopt;
    }
    const NodeID batch_size = std::min<NodeID>(delta_, n - cursor_);

    Batch batch;
    batch.first_global_id = cursor_;
    batch.batch_index = cursor_ / delta_ + 1;
    batch.delta = delta_;
    batch.nodes.resize(batch_size);

    for (NodeID local = 0; local < batch_size; ++local) {
        do {
            if (!std::getline(*source_, line_buffer_)) {
                throw ParseError(name_ + ": truncated stream, " +
                                 std::to_string(cursor_ + local) + " of " +
                                 std::to_string(n) + " adjacency lines present");
            }
            ++line_number_;
        } while (!line_buffer_.empty() && line_buffer_[0] == '%');

        BatchEntry& entry = batch.nodes[local];
        const NodeID global_id = cursor_ + local;
        LineScanner scanner(line_buffer_);

        if (header_.has_node_weights) {
            auto w = scanner.next();
            if (!w) {
                throw ParseError(location() + ": missing node weight");
            }
            entry.weight = static_cast<NodeWeight>(*w);
        }

        while (auto neighbor = scanner.next()) {
            if (*neighbor < 1 || *neighbor > n) {
                throw ParseError(location() + ": neighbor id " +
                                 std::to_string(*neighbor) + " out of [1, " +
                                 std::to_string(n) + "]");
            }
            EdgeWeight weight = 1;
            if (header_.has_edge_weights) {
                auto w = scanner.next();
                if (!w) {
                    throw ParseError(location() + ": missing edge weight");
                }
                weight = static_cast<EdgeWeight>(*w);
                if (weight <= 0) {
                    throw ParseError(location() + ": non-positive edge weight");
                }
            }
            const NodeID target = *neighbor - 1;
            if (target == global_id) {
                ++dropped_self_loops_;
                continue;
            }
            entry.neighbors.emplace_back(target, weight);
        }
        if (!scanner.at_end()) {
            throw ParseError(location() + ": unparsable token in adjacency line");
        }

        // Merge duplicate neighbors within the line by weight sum.
        auto& nbrs = entry.neighbors;
        std::sort(nbrs.begin(), nbrs.end());
        std::size_t out = 0;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (out > 0 && nbrs[out - 1].first == nbrs[i].first) {
                nbrs[out - 1].second += nbrs[i].second;
            } else {
                nbrs[out++] = nbrs[i];
            }
        }
        nbrs.resize(out);
    }

    cursor_ += batch_size;
    if (cursor_ == n && dropped_self_loops_ > 0 && pass_index_ == 1) {
        std::cerr << name_ << ": dropped " << dropped_self_loops_
                  << " self-loop entries\n";
    }
    return batch;
}

void GraphStream::rewind() {
    if (cursor_ != header_.node_count) {
        throw StateError("rewind requested mid-pass at node " +
                         std::to_string(cursor_));
    }
    source_->clear();
    source_->seekg(data_start_);
    if (!*source_) {
        throw StateError(name_ + ": source is not seekable, restream unsupported");
    }
    cursor_ = 0;
    ++pass_index_;
}

void write_partition(const PartitionState& state, const std::string& path) {
    if (!state.complete()) {
        throw StateError("partition incomplete: " +
                         std::to_string(state.assigned_count()) + " of " +
                         std::to_string(state.node_count()) + " nodes assigned");
    }
    write_partition(state.raw_assignment(), path);
}

void write_partition(const std::vector<BlockID>& assignment,
                     const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open partition file for writing: " + path);
    }
    for (const BlockID block : assignment) {
        if (block == kInvalidBlock) {
            throw StateError("unassigned node in partition output");
        }
        out << block << "\n";
    }
    if (!out) {
        throw ParseError("failed writing partition file: " + path);
    }
}

std::vector<BlockID> load_partition(const std::string& path, NodeID node_count,
                                    BlockID k) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open partition file: " + path);
    }
    std::vector<BlockID> assignment;
    assignment.reserve(node_count);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '%') {
            continue;
        }
        LineScanner scanner(line);
        auto value = scanner.next();
        if (!value || !scanner.at_end()) {
            throw ParseError(path + ": malformed partition line " +
                             std::to_string(assignment.size() + 1));
        }
        if (*value >= k) {
            throw ParseError(path + ": block id " + std::to_string(*value) +
                             " out of [0, " + std::to_string(k) + ")");
        }
        assignment.push_back(static_cast<BlockID>(*value));
        if (assignment.size() > node_count) {
            throw ParseError(path + ": more lines than nodes");
        }
    }
    if (assignment.size() != node_count) {
        throw ParseError(path + ": expected " + std::to_string(node_count) +
                         " lines, found " + std::to_string(assignment.size()));
    }
    return assignment;
}

Graph assemble_graph(GraphStream& stream) {
    if (stream.cursor() != 0) {
        throw StateError("assemble_graph requires a stream at start of pass");
    }
    GraphBuilder builder(stream.header().node_count);
    while (auto batch = stream.next_batch()) {
        for (NodeID local = 0; local < batch->size(); ++local) {
            const NodeID u = batch->first_global_id + local;
            builder.set_node_weight(u, batch->nodes[local].weight);
            for (const auto& [v, w] : batch->nodes[local].neighbors) {
                builder.add_arc(u, v, w);
            }
        }
    }
    return builder.build();
}

} // namespace streampart
