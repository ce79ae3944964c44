/******************************************************************************
 * streampart_main.cpp
 *
 * Command line front end: single runs, experiment grids, verification and
 * synthetic graph generation.
 *****************************************************************************/

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "streampart/config.hpp"
#include "streampart/generators.hpp"
#include "streampart/graph_io.hpp"
#include "streampart/metrics.hpp"
#include "streampart/streamers.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace streampart;

json result_to_json(const std::string& graph, const Config& cfg,
                    const RunResult& result) {
    json j;
    j["graph"] = graph;
    j["algorithm"] = to_string(cfg.algorithm);
    j["k"] = cfg.k;
    j["seed"] = cfg.seed;
    j["delta"] = cfg.buffer_size;
    j["passes"] = cfg.passes;
    j["edge_cut"] = result.edge_cut;
    j["cut_fraction"] = result.cut_fraction;
    j["balance"] = result.balance;
    j["runtime_ms"] = {{"io", result.runtime.io_ms},
                       {"model", result.runtime.model_ms},
                       {"partition", result.runtime.partition_ms},
                       {"total", result.runtime.total_ms()}};
    j["fallback_count"] = result.fallback_count;
    j["pass_cuts"] = result.pass_cuts;
    return j;
}

void add_common_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--k", cfg.k, "number of blocks")->required();
    cmd->add_option("--epsilon", cfg.epsilon, "allowed imbalance fraction")->capture_default_str();
    cmd->add_option("--buffer-size", cfg.buffer_size,
                    "nodes per stream batch (delta)")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    cmd->add_option("--passes", cfg.passes, "stream passes")->capture_default_str();
    cmd->add_option(
           "--model",
           [&cfg](const std::vector<std::string>& v) {
               cfg.model_kind = model_kind_from_string(v.front());
               return true;
           },
           "model construction: basic or extended (default extended)")
        ->expected(1);
    cmd->add_option("--alpha-tuning", cfg.alpha_tuning,
                    "multiplier on the Fennel alpha (heistream only)")->capture_default_str();
    cmd->add_option("--coarsening-rounds", cfg.coarsening_rounds,
                    "label propagation rounds per coarsening level")->capture_default_str();
    cmd->add_option("--local-search-rounds", cfg.local_search_rounds,
                    "label propagation rounds per refinement level")->capture_default_str();
    cmd->add_option("--x", cfg.coarsest_factor_x,
                    "coarsest model size factor")->capture_default_str();
    cmd->add_flag("--approx-pow", cfg.use_approx_pow,
                  "use approximate powering in the Fennel penalty");
}

int cmd_partition(const std::string& graph_path, Config cfg,
                  const std::string& output, const std::string& json_path) {
    GraphStream stream(graph_path, cfg.buffer_size);
    if (cfg.k > stream.header().node_count) {
        std::cerr << "warning: k exceeds the number of nodes\n";
    }
    const RunResult result = run(stream, cfg);
    if (!output.empty()) {
        write_partition(result.partition, output);
    }
    const json j = result_to_json(graph_path, cfg, result);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << j.dump(2) << "\n";
    }
    std::cout << j.dump(2) << std::endl;
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& partition_path,
               BlockID k, double epsilon, const std::string& claim_path) {
    GraphStream stream(graph_path, 4096);
    const StreamHeader& header = stream.header();
    const std::vector<BlockID> assignment =
        load_partition(partition_path, header.node_count, k);
    const NodeWeight l_max = compute_lmax(header.total_node_weight, k, epsilon);

    // Block weights need node weights, which another streaming pass provides.
    std::vector<NodeWeight> block_weights(k, 0);
    EdgeCutResult cut;
    {
        GraphStream weight_stream(graph_path, 4096);
        while (auto batch = weight_stream.next_batch()) {
            for (NodeID local = 0; local < batch->size(); ++local) {
                block_weights[assignment[batch->first_global_id + local]] +=
                    batch->nodes[local].weight;
            }
        }
        cut = edge_cut(stream, assignment);
    }

    bool balanced = true;
    for (BlockID j = 0; j < k; ++j) {
        balanced = balanced && block_weights[j] <= l_max;
    }

    bool cut_matches = true;
    if (!claim_path.empty()) {
        std::ifstream claim_in(claim_path);
        if (!claim_in) {
            throw ParseError("cannot open claim file: " + claim_path);
        }
        json claim = json::parse(claim_in);
        cut_matches = claim.at("edge_cut").get<EdgeWeight>() == cut.cut;
    }

    std::cout << "edge_cut=" << cut.cut << " cut_fraction=" << cut.fraction()
              << " l_max=" << l_max << " balance=" << balance(block_weights)
              << " balanced=" << (balanced ? "yes" : "no");
    if (!claim_path.empty()) {
        std::cout << " claim_matches=" << (cut_matches ? "yes" : "no");
    }
    std::cout << std::endl;
    return balanced && cut_matches ? 0 : 1;
}

int cmd_bench(const std::vector<std::string>& graphs,
              const std::vector<std::string>& algorithms,
              const std::vector<BlockID>& ks, int repetitions, Config base_cfg,
              const std::string& csv_path, bool omit_runtime) {
    std::ofstream csv(csv_path);
    if (!csv) {
        throw ParseError("cannot open csv output: " + csv_path);
    }
    csv << "graph,algorithm,k,seed,delta,passes,edge_cut,cut_fraction,balance,"
           "io_ms,model_ms,partition_ms,total_ms,fallback_count,pass_cuts\n";

    // mean cut per (algorithm, k, graph), for the aggregate block
    std::map<std::pair<std::string, BlockID>, std::vector<double>> mean_cuts;

    for (const std::string& graph : graphs) {
        for (const std::string& algorithm : algorithms) {
            for (const BlockID k : ks) {
                double cut_sum = 0.0;
                for (int rep = 1; rep <= repetitions; ++rep) {
                    Config cfg = base_cfg;
                    cfg.algorithm = algorithm_from_string(algorithm);
                    cfg.k = k;
                    cfg.seed = static_cast<std::uint64_t>(rep);
                    if (cfg.algorithm == Algorithm::refennel) {
                        cfg.passes = std::max(cfg.passes, 2);
                    }
                    GraphStream stream(graph, cfg.buffer_size);
                    const RunResult result = run(stream, cfg);
                    cut_sum += static_cast<double>(result.edge_cut);

                    csv << graph << "," << algorithm << "," << k << ","
                        << cfg.seed << "," << cfg.buffer_size << ","
                        << cfg.passes << "," << result.edge_cut << ","
                        << std::setprecision(10) << result.cut_fraction << ","
                        << result.balance << ",";
                    if (omit_runtime) {
                        csv << ",,,,";
                    } else {
                        csv << result.runtime.io_ms << ","
                            << result.runtime.model_ms << ","
                            << result.runtime.partition_ms << ","
                            << result.runtime.total_ms() << ",";
                    }
                    csv << result.fallback_count << ",";
                    for (std::size_t i = 0; i < result.pass_cuts.size(); ++i) {
                        csv << (i == 0 ? "" : ";") << result.pass_cuts[i];
                    }
                    csv << "\n";
                }
                mean_cuts[{algorithm, k}].push_back(cut_sum / repetitions);
            }
        }
    }

    // Aggregate block: geometric mean over graphs, improvement over fennel.
    csv << "# aggregate,algorithm,k,geomean_cut,improvement_vs_fennel_pct\n";
    for (const auto& [key, values] : mean_cuts) {
        std::vector<double> positive;
        for (const double v : values) {
            if (v > 0.0) {
                positive.push_back(v);
            }
        }
        if (positive.size() != values.size()) {
            csv << "# note: " << values.size() - positive.size() << " zero-cut "
                << "instances excluded from the geometric mean for "
                << key.first << ",k=" << key.second << "\n";
        }
        if (positive.empty()) {
            continue;
        }
        const double geo = geometric_mean(positive);
        csv << "# aggregate," << key.first << "," << key.second << ","
            << std::setprecision(10) << geo;
        const auto fennel = mean_cuts.find({"fennel", key.second});
        if (fennel != mean_cuts.end() && key.first != "fennel") {
            std::vector<double> fennel_positive;
            for (const double v : fennel->second) {
                if (v > 0.0) {
                    fennel_positive.push_back(v);
                }
            }
            if (fennel_positive.size() == positive.size()) {
                csv << "," << improvement_percent(geo,
                                                  geometric_mean(fennel_positive));
            }
        }
        csv << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"streampart: buffered streaming graph partitioning toolkit"};
    app.require_subcommand(1);

    // partition
    auto* partition = app.add_subcommand("partition", "partition one graph");
    std::string graph_path;
    std::string output_path;
    std::string json_path;
    std::string algorithm_name = "heistream";
    Config cfg;
    partition->add_option("--graph", graph_path, "METIS graph file")
        ->required()
        ->check(CLI::ExistingFile);
    partition->add_option("--algorithm", algorithm_name,
                          "heistream|fennel|refennel|ldg|hashing")->capture_default_str();
    partition->add_option("--output", output_path, "partition output file");
    partition->add_option("--json", json_path, "JSON result output file");
    add_common_options(partition, cfg);

    // verify
    auto* verify = app.add_subcommand(
        "verify", "recompute cut and balance from a partition file");
    std::string verify_graph;
    std::string verify_partition;
    std::string claim_path;
    BlockID verify_k = 2;
    double verify_epsilon = 0.03;
    verify->add_option("--graph", verify_graph)->required()->check(
        CLI::ExistingFile);
    verify->add_option("--partition", verify_partition)
        ->required()
        ->check(CLI::ExistingFile);
    verify->add_option("--k", verify_k)->required();
    verify->add_option("--epsilon", verify_epsilon, "")->capture_default_str();
    verify->add_option("--claim", claim_path, "JSON result to check against");

    // bench
    auto* bench = app.add_subcommand("bench", "run an experiment grid");
    std::vector<std::string> bench_graphs;
    std::vector<std::string> bench_algorithms = {"heistream", "fennel", "ldg",
                                                 "hashing"};
    std::vector<BlockID> bench_ks = {32};
    int repetitions = 10;
    std::string csv_path;
    bool omit_runtime = false;
    Config bench_cfg;
    bench->add_option("--graph", bench_graphs, "graph files")
        ->required()
        ->check(CLI::ExistingFile);
    bench->add_option("--algorithm", bench_algorithms, "algorithms")->capture_default_str();
    bench->add_option("--k-list", bench_ks, "block counts")->capture_default_str();
    bench->add_option("--repetitions", repetitions,
                      "seeds 1..N per (graph, algorithm, k)")->capture_default_str();
    bench->add_option("--csv", csv_path, "CSV output file")->required();
    bench->add_flag("--omit-runtime", omit_runtime,
                    "leave runtime columns empty for bit-identical output");
    bench->add_option("--epsilon", bench_cfg.epsilon, "")->capture_default_str();
    bench->add_option("--buffer-size", bench_cfg.buffer_size, "")->capture_default_str();
    bench->add_option("--passes", bench_cfg.passes, "")->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic METIS graph");
    gen->require_subcommand(1);
    std::string gen_output;
    std::uint64_t gen_seed = 1;

    auto* gen_rgg = gen->add_subcommand("rgg", "random geometric graph");
    unsigned log_n = 14;
    gen_rgg->add_option("--log-n", log_n, "n = 2^log-n")->capture_default_str();
    gen_rgg->add_option("--seed", gen_seed, "")->capture_default_str();
    gen_rgg->add_option("--output", gen_output)->required();

    auto* gen_gnp = gen->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
    NodeID gnp_n = 2000;
    double gnp_p = 0.01;
    gen_gnp->add_option("--n", gnp_n, "")->capture_default_str();
    gen_gnp->add_option("--p", gnp_p, "")->capture_default_str();
    gen_gnp->add_option("--seed", gen_seed, "")->capture_default_str();
    gen_gnp->add_option("--output", gen_output)->required();

    auto* gen_grid = gen->add_subcommand("grid", "rows x cols lattice");
    NodeID grid_rows = 128;
    NodeID grid_cols = 128;
    gen_grid->add_option("--rows", grid_rows, "")->capture_default_str();
    gen_grid->add_option("--cols", grid_cols, "")->capture_default_str();
    gen_grid->add_option("--output", gen_output)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (partition->parsed()) {
            cfg.algorithm = algorithm_from_string(algorithm_name);
            return cmd_partition(graph_path, cfg, output_path, json_path);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_graph, verify_partition, verify_k,
                              verify_epsilon, claim_path);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_graphs, bench_algorithms, bench_ks,
                             repetitions, bench_cfg, csv_path, omit_runtime);
        }
        if (gen->parsed()) {
            Graph graph;
            if (gen_rgg->parsed()) {
                const NodeID n = NodeID{1} << log_n;
                graph = random_geometric_graph(n, rgg_radius(n), gen_seed);
            } else if (gen_gnp->parsed()) {
                graph = erdos_renyi_graph(gnp_n, gnp_p, gen_seed);
            } else {
                graph = grid_graph(grid_rows, grid_cols);
            }
            write_metis_file(gen_output, graph);
            std::cout << "wrote " << gen_output << " with "
                      << graph.node_count() << " nodes and "
                      << graph.edge_count() << " edges" << std::endl;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}
