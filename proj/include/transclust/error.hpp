#pragma once

#include <stdexcept>
#include <string>

namespace transclust {

/// Raised for malformed or unusable input data (bad CSV rows, zero vectors
/// under the cosine metric, missing labels). Precondition violations on
/// arguments use std::invalid_argument instead.
class data_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace transclust
