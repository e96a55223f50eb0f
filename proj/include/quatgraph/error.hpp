#pragma once

#include <stdexcept>
#include <string>

namespace quatgraph {

// Violated operation precondition (bad input). CLI maps this to exit code 2.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariant or exhausted guard. CLI maps this to exit code 3.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace quatgraph
