#pragma once

#include <stdexcept>
#include <string>

namespace tpareto {

// Malformed input: bad edge records, unknown names, missing cost column, ...
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The network violates a model requirement (e.g. a zero-delay snapshot has a
// cycle and the caller did not assert transitive closure).
class model_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tpareto
