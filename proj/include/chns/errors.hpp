#pragma once

#include <stdexcept>
#include <string>

namespace chns {

// Exit codes used by the CLI map onto these categories.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct contract_error : std::logic_error {
    explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

struct positivity_error : std::runtime_error {
    explicit positivity_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace chns
