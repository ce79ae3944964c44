/******************************************************************************
 * config.cpp
 *****************************************************************************/

#include "streampart/config.hpp"

namespace streampart {

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "heistream") return Algorithm::heistream;
    if (name == "fennel") return Algorithm::fennel;
    if (name == "refennel") return Algorithm::refennel;
    if (name == "ldg") return Algorithm::ldg;
    if (name == "hashing") return Algorithm::hashing;
    throw ConfigError("unknown algorithm: " + name);
}

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::heistream: return "heistream";
        case Algorithm::fennel: return "fennel";
        case Algorithm::refennel: return "refennel";
        case Algorithm::ldg: return "ldg";
        case Algorithm::hashing: return "hashing";
    }
    return "unknown";
}

ModelKind model_kind_from_string(const std::string& name) {
    if (name == "basic") return ModelKind::basic;
    if (name == "extended") return ModelKind::extended;
    throw ConfigError("unknown model kind: " + name);
}

std::string to_string(ModelKind kind) {
    return kind == ModelKind::basic ? "basic" : "extended";
}

void Config::validate() const {
    if (k < 1) {
        throw ConfigError("k must be at least 1");
    }
    if (buffer_size < 1) {
        throw ConfigError("buffer size must be at least 1");
    }
    if (epsilon < 0.0) {
        throw ConfigError("epsilon must be non-negative");
    }
    if (passes < 1) {
        throw ConfigError("passes must be at least 1");
    }
    if (coarsest_factor_x < 1) {
        throw ConfigError("coarsest size factor x must be at least 1");
    }
    if (coarsening_rounds < 1 || local_search_rounds < 0) {
        throw ConfigError("round counts out of range");
    }
    if (alpha_tuning <= 0.0) {
        throw ConfigError("alpha tuning factor must be positive");
    }
}

} // namespace streampart
