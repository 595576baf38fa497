#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcrlab {

/* Malformed input: bad dimensions, unparsable documents, out-of-range r. */
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A theorem hypothesis failed and no sound fallback exists. */
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Two derivation steps produced incompatible bounds (lo > hi). */
struct InconsistencyError : std::runtime_error {
    InconsistencyError(const std::string& msg, std::size_t step_a, std::size_t step_b,
                       std::string desc_a, std::string desc_b)
        : std::runtime_error(msg),
          step_a_index(step_a),
          step_b_index(step_b),
          step_a_desc(std::move(desc_a)),
          step_b_desc(std::move(desc_b)) {}

    std::size_t step_a_index;
    std::size_t step_b_index;
    std::string step_a_desc;
    std::string step_b_desc;
};

}  // namespace tcrlab
