#pragma once

#include <stdexcept>
#include <string>

namespace peerline {

struct NotRealizable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RuleInapplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace peerline
