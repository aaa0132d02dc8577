#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fairdiv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally malformed input: wrong matrix shape, duplicate item ids, bad
/// table length, unparseable numbers.
class InstanceError : public Error {
public:
    using Error::Error;
};

class ZeroTotal : public Error {
public:
    explicit ZeroTotal(std::size_t agent)
        : Error("agent " + std::to_string(agent) + " has zero total value"), agent(agent) {}
    std::size_t agent;
};

class SignMismatch : public Error {
public:
    explicit SignMismatch(std::size_t agent)
        : Error("total value of agent " + std::to_string(agent) +
                " does not have the sign of the requested common total"),
          agent(agent) {}
    std::size_t agent;
};

class NotChoresOnly : public Error {
public:
    NotChoresOnly(std::size_t agent, std::size_t item)
        : Error("agent " + std::to_string(agent) + " values item " + std::to_string(item) +
                " positively; a chores-only additive instance is required"),
          agent(agent), item(item) {}
    std::size_t agent;
    std::size_t item;
};

class NotAdditive : public Error {
public:
    NotAdditive() : Error("an additive valuation is required") {}
};

class NotIdentical : public Error {
public:
    explicit NotIdentical(std::size_t agent)
        : Error("valuation row of agent " + std::to_string(agent) + " differs from agent 0"),
          agent(agent) {}
    std::size_t agent;
};

class SearchSpaceTooLarge : public Error {
public:
    SearchSpaceTooLarge(std::uint64_t space, std::uint64_t limit)
        : Error("search space of " + (space == UINT64_MAX ? std::string(">2^64") : std::to_string(space)) +
                " allocations exceeds the limit of " + std::to_string(limit)),
          space(space), limit(limit) {}
    std::uint64_t space;  // saturates at UINT64_MAX
    std::uint64_t limit;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class FixtureMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace fairdiv
