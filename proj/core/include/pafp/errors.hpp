#pragma once

#include <stdexcept>
#include <string>

namespace pafp {

// Bad or malformed input (files, raw instance data). CLI maps this to exit 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was invoked outside its supported promise class
// (non-DAG input, width out of bounds, infeasible generation). Exit 3.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configurable resource cap was hit before a decision was reached. Exit 3.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pafp
