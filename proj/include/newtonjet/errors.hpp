#pragma once

#include <stdexcept>
#include <string>

namespace newtonjet {

// Rejected input: malformed expressions, out-of-scope curves, bad parameters.
// The command layer maps this to exit status 1 and prints the message verbatim.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace newtonjet
