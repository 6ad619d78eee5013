#ifndef CYCLONUM_ERRORS_HPP
#define CYCLONUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclonum {

// Thrown when a computation would exceed a configured resource bound
// (table memory, enumeration width, ...).  The message names the bound.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation is mathematically meaningless for the given
// input (e.g. residue-class membership of 2 in characteristic 2).
class unsupported_case_error : public std::runtime_error {
public:
    explicit unsupported_case_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cyclonum

#endif
