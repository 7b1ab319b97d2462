#pragma once

#include <stdexcept>
#include <string>

namespace cvdj {

// Thrown when an enumeration or brute-force search would exceed its
// configured size cap (these grow combinatorially).
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an iterative numeric routine cannot reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cvdj
