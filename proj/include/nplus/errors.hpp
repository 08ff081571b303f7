#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace nplus {

/// Malformed or out-of-range input (bad node id, invalid family parameters, parse failures).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold for its argument.
/// Carries the name of the failed predicate and, when one exists, a node that violates it.
class ContractError : public std::logic_error {
public:
    ContractError(std::string predicate, std::optional<int> node, const std::string& what)
        : std::logic_error(what), predicate_(std::move(predicate)), node_(node) {}

    const std::string& predicate() const noexcept { return predicate_; }
    std::optional<int> violating_node() const noexcept { return node_; }

private:
    std::string predicate_;
    std::optional<int> node_;
};

/// Input is larger than the configured desk-scale limit for an exhaustive computation.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace nplus
