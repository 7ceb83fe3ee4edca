#pragma once

#include <stdexcept>
#include <string>

namespace qgb {

/// Raised for malformed inputs: bad config files, violated preconditions,
/// out-of-range probabilities and the like. The CLI maps this to exit
/// code 1; every other exception exits with code 2.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace qgb
