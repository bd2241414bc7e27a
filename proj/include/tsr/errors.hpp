#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsr {

// Malformed graphs, configs, partitions or serialized input.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidModel : public InvalidInput {
public:
    InvalidModel(const std::string& msg, std::size_t vertex)
        : InvalidInput(msg), vertex_(vertex) {}
    std::size_t vertex() const { return vertex_; }

private:
    std::size_t vertex_;
};

class NotChordal : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class ParameterError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class PreconditionError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class ResourceExceeded : public std::runtime_error {
public:
    ResourceExceeded(std::size_t attempted, std::size_t budget)
        : std::runtime_error("state budget exceeded: " + std::to_string(attempted) +
                             " states attempted, budget " + std::to_string(budget)),
          attempted_(attempted), budget_(budget) {}
    std::size_t attempted() const { return attempted_; }
    std::size_t budget() const { return budget_; }

private:
    std::size_t attempted_;
    std::size_t budget_;
};

class GenerationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tsr
