#pragma once

#include <stdexcept>
#include <string>

namespace topoplan {

// Configuration problems map to CLI exit code 2; other failures exit 3.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace topoplan
