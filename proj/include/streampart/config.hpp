/******************************************************************************
 * config.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <string>

#include "streampart/definitions.hpp"

namespace streampart {

enum class Algorithm { heistream, fennel, refennel, ldg, hashing };
enum class ModelKind { basic, extended };

Algorithm algorithm_from_string(const std::string& name);
std::string to_string(Algorithm algorithm);
ModelKind model_kind_from_string(const std::string& name);
std::string to_string(ModelKind kind);

struct Config {
    BlockID k = 2;
    double epsilon = 0.03;
    NodeID buffer_size = 32768;
    ModelKind model_kind = ModelKind::extended;
    int passes = 1;
    int coarsening_rounds = 5;
    int local_search_rounds = 5;
    int coarsest_factor_x = 4;
    double alpha_tuning = 0.5;
    bool use_approx_pow = false;
    std::uint64_t seed = 1;
    Algorithm algorithm = Algorithm::heistream;

    void validate() const;
};

} // namespace streampart
