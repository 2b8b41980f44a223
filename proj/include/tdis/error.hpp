#pragma once

#include <stdexcept>
#include <string>

namespace tdis {

// Error classes map 1:1 onto CLI exit codes: io_error -> 3, parse_error -> 4,
// numeric_error -> 5. Precondition violations throw std::invalid_argument
// (usage, exit 2).

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// degenerate inputs and exhausted numerical budgets
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tdis
