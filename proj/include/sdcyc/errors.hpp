#pragma once

#include <stdexcept>
#include <string>

namespace sdcyc {

/// Thrown when a computation would exceed a configured resource guard
/// (enumeration iteration budget, big-integer expansion size, ...).
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sdcyc
