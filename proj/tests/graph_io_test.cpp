/******************************************************************************
 * graph_io_test.cpp
 *****************************************************************************/

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "streampart/graph_io.hpp"
#include "test_util.hpp"

using namespace streampart;
using testutil::corpus;
using testutil::make_stream;
using testutil::parse_metis_naive;

namespace {
const std::string kTriangle = "3 3\n2 3\n1 3\n1 2\n";
}

TEST(GraphStream, ParsesTriangleHeader) {
    GraphStream stream = make_stream(kTriangle, 2);
    EXPECT_EQ(stream.header().node_count, 3u);
    EXPECT_EQ(stream.header().edge_count, 3u);
    EXPECT_FALSE(stream.header().has_node_weights);
    EXPECT_FALSE(stream.header().has_edge_weights);
    EXPECT_EQ(stream.header().total_node_weight, 3);
    EXPECT_EQ(stream.batch_count(), 2u);
}

TEST(GraphStream, ParsesEdgeWeights) {
    GraphStream stream = make_stream("2 1 1\n2 5\n1 5\n", 2);
    auto batch = stream.next_batch();
    ASSERT_TRUE(batch.has_value());
    ASSERT_EQ(batch->nodes[0].neighbors.size(), 1u);
    EXPECT_EQ(batch->nodes[0].neighbors[0], (std::pair<NodeID, EdgeWeight>{1, 5}));
    EXPECT_EQ(batch->nodes[1].neighbors[0], (std::pair<NodeID, EdgeWeight>{0, 5}));
}

TEST(GraphStream, IsolatedSingleNode) {
    GraphStream stream = make_stream("1 0\n\n", 1);
    auto batch = stream.next_batch();
    ASSERT_TRUE(batch.has_value());
    EXPECT_EQ(batch->size(), 1u);
    EXPECT_TRUE(batch->nodes[0].neighbors.empty());
    EXPECT_FALSE(stream.next_batch().has_value());
}

TEST(GraphStream, BatchesOfTriangle) {
    GraphStream stream = make_stream(kTriangle, 2);
    auto first = stream.next_batch();
    ASSERT_TRUE(first.has_value());
    EXPECT_EQ(first->first_global_id, 0u);
    EXPECT_EQ(first->size(), 2u);
    EXPECT_EQ(first->nodes[0].neighbors,
              (std::vector<std::pair<NodeID, EdgeWeight>>{{1, 1}, {2, 1}}));
    EXPECT_EQ(first->nodes[1].neighbors,
              (std::vector<std::pair<NodeID, EdgeWeight>>{{0, 1}, {2, 1}}));

    auto second = stream.next_batch();
    ASSERT_TRUE(second.has_value());
    EXPECT_EQ(second->first_global_id, 2u);
    EXPECT_EQ(second->size(), 1u);
    EXPECT_EQ(second->batch_index, 2u);

    EXPECT_FALSE(stream.next_batch().has_value());
    EXPECT_TRUE(stream.end_of_pass());
}

TEST(GraphStream, WholeGraphInOneBatch) {
    GraphStream stream = make_stream(kTriangle, 3);
    auto batch = stream.next_batch();
    ASSERT_TRUE(batch.has_value());
    EXPECT_EQ(batch->size(), 3u);
    EXPECT_FALSE(stream.next_batch().has_value());

    GraphStream large = make_stream(kTriangle, 100);
    EXPECT_EQ(large.next_batch()->size(), 3u);
}

TEST(GraphStream, RewindRestartsPass) {
    GraphStream stream = make_stream(kTriangle, 2);
    EXPECT_THROW(stream.rewind(), StateError); // mid-pass (before any batch)
    while (stream.next_batch()) {
    }
    EXPECT_EQ(stream.pass_index(), 1u);
    stream.rewind();
    EXPECT_EQ(stream.pass_index(), 2u);
    auto batch = stream.next_batch();
    ASSERT_TRUE(batch.has_value());
    EXPECT_EQ(batch->first_global_id, 0u);
}

TEST(GraphStream, CommentLinesAreSkipped) {
    GraphStream stream =
        make_stream("% a comment\n3 3\n% another\n2 3\n1 3\n1 2\n", 3);
    auto batch = stream.next_batch();
    ASSERT_TRUE(batch.has_value());
    EXPECT_EQ(batch->nodes[0].neighbors.size(), 2u);
}

TEST(GraphStream, ParseErrors) {
    EXPECT_THROW(make_stream("", 1), ParseError);
    EXPECT_THROW(make_stream("x y\n", 1), ParseError);
    EXPECT_THROW(make_stream("3 3 7\n", 1), ParseError); // unknown fmt
    EXPECT_THROW(make_stream("2 1 10\n1 2\n1 1\n", 1), ParseError); // no total

    GraphStream out_of_range = make_stream("2 1\n4\n1\n", 2);
    EXPECT_THROW(out_of_range.next_batch(), ParseError);

    GraphStream truncated = make_stream("3 3\n2 3\n1 3\n", 3);
    EXPECT_THROW(truncated.next_batch(), ParseError);
}

TEST(GraphStream, NodeWeightedHeaderCarriesTotal) {
    GraphStream stream = make_stream("3 2 10 9\n4 2\n3 1 3\n2 2\n", 3);
    EXPECT_EQ(stream.header().total_node_weight, 9);
    auto batch = stream.next_batch();
    ASSERT_TRUE(batch.has_value());
    EXPECT_EQ(batch->nodes[0].weight, 4);
    EXPECT_EQ(batch->nodes[1].weight, 3);
    EXPECT_EQ(batch->nodes[2].weight, 2);
}

TEST(GraphStream, DuplicateNeighborsMergedSelfLoopsDropped) {
    GraphStream stream = make_stream("2 2 1\n2 3 2 4 1 9\n1 3 1 4\n", 2);
    auto batch = stream.next_batch();
    ASSERT_TRUE(batch.has_value());
    ASSERT_EQ(batch->nodes[0].neighbors.size(), 1u);
    EXPECT_EQ(batch->nodes[0].neighbors[0],
              (std::pair<NodeID, EdgeWeight>{1, 7}));
    EXPECT_EQ(stream.dropped_self_loops(), 1u);
}

TEST(GraphStream, NaturalOrderPreserved) {
    for (const NodeID delta : {1, 3, 7, 64}) {
        GraphStream stream = make_stream(corpus()[7].metis, delta);
        NodeID expected = 0;
        while (auto batch = stream.next_batch()) {
            EXPECT_EQ(batch->first_global_id, expected);
            expected += batch->size();
        }
        EXPECT_EQ(expected, stream.header().node_count);
    }
}

TEST(GraphStream, AssembledGraphMatchesNaiveParser) {
    for (const auto& [name, metis, n] : corpus()) {
        const testutil::NaiveGraph naive = parse_metis_naive(metis);
        GraphStream stream = make_stream(metis, 13);
        const Graph g = assemble_graph(stream);
        ASSERT_EQ(g.node_count(), naive.n) << name;
        ASSERT_EQ(g.edge_count(), naive.m) << name;
        for (NodeID u = 0; u < g.node_count(); ++u) {
            ASSERT_EQ(static_cast<std::size_t>(g.degree(u)),
                      naive.adjacency[u].size())
                << name;
            for (const Arc& arc : g.arcs(u)) {
                const auto it = naive.adjacency[u].find(arc.target);
                ASSERT_NE(it, naive.adjacency[u].end()) << name;
                ASSERT_EQ(it->second, arc.weight) << name;
            }
        }
    }
}

TEST(PartitionFiles, WriteLoadRoundTrip) {
    const std::string path =
        (std::filesystem::temp_directory_path() / "sp_io_test.part").string();
    PartitionState state(3, 2, 100);
    state.assign(0, 0, 1);
    state.assign(1, 1, 1);
    state.assign(2, 1, 1);
    write_partition(state, path);

    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    EXPECT_EQ(content, "0\n1\n1\n");

    const std::vector<BlockID> loaded = load_partition(path, 3, 2);
    EXPECT_EQ(loaded, state.raw_assignment());

    EXPECT_THROW(load_partition(path, 4, 2), ParseError); // wrong line count
    EXPECT_THROW(load_partition(path, 3, 1), ParseError); // block out of range
    std::filesystem::remove(path);
}

TEST(PartitionFiles, WriteRejectsIncompleteState) {
    PartitionState state(3, 2, 100);
    state.assign(0, 0, 1);
    EXPECT_THROW(write_partition(state, "/tmp/sp_incomplete.part"), StateError);
}
