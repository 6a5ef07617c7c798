#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gam {

using NodeId = std::int32_t;
using ClassId = std::int32_t;

// Explicit node subset (e.g. one data split). Functions taking an optional
// subset interpret nullptr as "all nodes"; an empty subset is an input error.
using NodeList = std::vector<NodeId>;

// Violations of documented preconditions on user-supplied data.
// The CLI maps these to exit code 1; anything else escaping to main is an
// internal invariant violation and maps to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gam
