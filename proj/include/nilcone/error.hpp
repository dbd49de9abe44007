#pragma once

#include <stdexcept>
#include <string>

namespace nilcone {

// Bad user input / unsupported parameters (CLI maps these to exit code 2).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A closed-form polynomial division left a remainder.  This always means a
// formula was transcribed wrongly, so the message names the offending shape.
struct inexact_division : std::logic_error {
    explicit inexact_division(const std::string& msg) : std::logic_error(msg) {}
};

// An orbit/closure search grew past the configured state cap.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace nilcone
