/******************************************************************************
 * definitions.hpp
 *****************************************************************************/

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace streampart {

using NodeID = std::uint64_t;
using EdgeID = std::uint64_t;
using BlockID = std::uint32_t;
using NodeWeight = std::int64_t;
using EdgeWeight = std::int64_t;

constexpr BlockID kInvalidBlock = std::numeric_limits<BlockID>::max();

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class StateError : public std::runtime_error {
public:
    explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace streampart
